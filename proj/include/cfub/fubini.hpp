#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfub/poly.hpp"
#include "cfub/series.hpp"
#include "cfub/triangles.hpp"

namespace cfub {

enum class FubiniRoute {
    definition,
    binomial_recurrence,
    odd_step_recurrence,
    stirling_connection,
    second_order,
    determinant,
    egf_series,
    parity_reflection,
};

std::optional<FubiniRoute> parse_route(const std::string& name);
std::string route_name(FubiniRoute r);
/// The seven exact computation routes (parity_reflection is a checker,
/// not an independent route).
const std::vector<FubiniRoute>& exact_routes();

/// delta[0^m] = (1/2)^m - (-1/2)^m: 0 for even m, 2^(1-m) for odd m.
Rational delta_zero_power(unsigned m);

/// c_n(x) = sum_k k! T(n,k) x^k, read off a prebuilt central-T table.
Poly c_poly_definition(unsigned n, const TriangleTable& table);

/// c_n(x) = x sum_{j<n} C(n,j) delta[0^(n-j)] c_j(x), bottom-up.
Poly c_poly_binomial_recurrence(unsigned n);

/// c_{n+1}(x) = x sum_k 4^(-k) C(n+1,2k+1) c_{n-2k}(x): the same
/// recurrence with the even (vanishing) steps dropped.
Poly c_poly_odd_step_recurrence(unsigned n);

/// c_n(x) = sum_k k! x^k sum_j C(n,j) (-k/2)^j S(n-j,k).
Poly c_poly_stirling(unsigned n, const TriangleTable& stirling);

/// Second-order derivative recurrence stepping n by 2 from c_0, c_1.
Poly c_poly_second_order(unsigned n);

/// Determinant of the order-n lower-Hessenberg matrix with unit
/// superdiagonal and Toeplitz band entry(i,j) = R(i-j+1), evaluated
/// through the equivalent linear recurrence
/// a_n = sum_j (-1)^(j-1) R(j) a_{n-j}. Throws if the entry function
/// does not describe that shape.
Poly hessenberg_determinant(unsigned order, const std::function<Poly(unsigned, unsigned)>& entry);

/// The band function R(j) = x (-1)^(j-1)/j! delta[0^j]; optionally
/// overridden at a single j (fault injection for verification tests).
Poly determinant_band_entry(unsigned j);

/// c_n(x) = n! * det with the band R above; n >= 1.
Poly c_poly_determinant(unsigned n);
/// Same, with R(inject_j) replaced by inject_value.
Poly c_poly_determinant_injected(unsigned n, unsigned inject_j, const Poly& inject_value);

/// Coefficient extraction from 1/(1 - 2x sinh(t/2)) truncated to order n+1.
Poly c_poly_from_egf(unsigned n);

Poly c_poly(unsigned n, FubiniRoute route);

/// c_n = c_n(1).
Rational c_number(unsigned n);

/// x [ (c+1/2)^n - (c-1/2)^n ] with c^k replaced by c_k(x) after expansion.
Poly umbral_check(unsigned n);

/// (LHS, RHS) of the r-th derivative identity: LHS the formal derivative,
/// RHS the multinomial convolution with the x^r division done exactly.
std::pair<Poly, Poly> rth_derivative_identity(unsigned n, unsigned r);

/// (x c_n'(x), sum_{k<n} C(n,k) c_k(x) c_{n-k}(x)).
std::pair<Poly, Poly> derivative_convolution(unsigned n);

/// (-1)^n c_n(-x), which must equal c_n(x).
Poly parity_reflect(unsigned n);

/// Polynomial as {"n": n, "coeffs": ["p/q", ...]} JSON.
std::string poly_to_json(unsigned n, const Poly& p);

}  // namespace cfub
