#pragma once

#include <vector>

#include "cfub/poly.hpp"

namespace cfub {

enum class BasisKind { monomial, falling_factorial, central_factorial };

/// E^a: p(x) -> p(x+a), expanded exactly.
Poly shift(const Poly& p, const Rational& a);

/// Delta: p(x) -> p(x+1) - p(x).
Poly forward_difference(const Poly& p);

/// delta: p(x) -> p(x+1/2) - p(x-1/2).
Poly central_difference(const Poly& p);

/// x_n = x(x-1)...(x-n+1); x_0 = 1.
Poly falling_factorial_poly(unsigned n);

/// x^[n] = x(x+n/2-1)(x+n/2-2)...(x-n/2+1); x^[0] = 1.
Poly central_factorial_poly(unsigned n);

/// The k-th basis polynomial of the given kind.
Poly basis_poly(BasisKind basis, unsigned k);

/// Coefficients c_k with p = sum c_k b_k, by top-down triangular
/// elimination (every basis here is monic and graded, so the expansion
/// exists and is unique). Result has degree(p)+1 entries; empty for p = 0.
std::vector<Rational> expand_in_basis(const Poly& p, BasisKind basis);

}  // namespace cfub
