#include "cfub/operators.hpp"

namespace cfub {

Poly shift(const Poly& p, const Rational& a) {
    if (a.is_zero() || p.is_zero()) return p;
    // Horner in the shifted variable: p(x+a) = (...(c_d (x+a) + c_{d-1})(x+a) + ...)
    Poly xa{a, Rational(1)};
    Poly acc;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * xa + Poly(p.coeff(static_cast<std::size_t>(i)));
    return acc;
}

Poly forward_difference(const Poly& p) { return shift(p, Rational(1)) - p; }

Poly central_difference(const Poly& p) {
    return shift(p, Rational(1, 2)) - shift(p, Rational(-1, 2));
}

Poly falling_factorial_poly(unsigned n) {
    Poly out = Poly::one();
    for (unsigned j = 0; j < n; ++j)
        out *= Poly{Rational(-static_cast<long>(j)), Rational(1)};
    return out;
}

Poly central_factorial_poly(unsigned n) {
    if (n == 0) return Poly::one();
    Poly out{Rational(0), Rational(1)};  // the leading factor x
    for (unsigned j = 1; j < n; ++j)
        out *= Poly{Rational(static_cast<long>(n), 2) - Rational(static_cast<long>(j)), Rational(1)};
    return out;
}

Poly basis_poly(BasisKind basis, unsigned k) {
    switch (basis) {
        case BasisKind::monomial: return Poly::monomial(Rational(1), k);
        case BasisKind::falling_factorial: return falling_factorial_poly(k);
        case BasisKind::central_factorial: return central_factorial_poly(k);
    }
    return Poly();
}

std::vector<Rational> expand_in_basis(const Poly& p, BasisKind basis) {
    if (p.is_zero()) return {};
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
    Poly rem = p;
    for (int k = p.degree(); k >= 0; --k) {
        // Each basis polynomial is monic of degree k, so the top coefficient
        // of the remainder is the expansion coefficient directly.
        Rational c = rem.coeff(static_cast<std::size_t>(k));
        out[static_cast<std::size_t>(k)] = c;
        if (!c.is_zero()) rem -= c * basis_poly(basis, static_cast<unsigned>(k));
    }
    return out;
}

}  // namespace cfub
