#pragma once

#include <vector>

#include "cfub/poly.hpp"

namespace cfub {

/// Truncated formal power series in t whose coefficients are exact
/// polynomials in x. The coefficient list always has exactly `order`
/// entries (truncation is exclusive: t^order and beyond are dropped).
class Series {
public:
    explicit Series(std::size_t order) : coeffs_(order) {}
    Series(std::size_t order, std::vector<Poly> cs);

    static Series unit(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Poly& coeff(std::size_t m) const { return coeffs_.at(m); }
    void set_coeff(std::size_t m, Poly p) { coeffs_.at(m) = std::move(p); }

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<Poly> coeffs_;
};

/// Cauchy product truncated to the common order. Throws on order mismatch.
Series series_mul(const Series& a, const Series& b);

/// Integer power by repeated multiplication.
Series series_pow(const Series& a, unsigned e);

/// Multiplicative inverse; requires constant term equal to 1.
Series series_reciprocal(const Series& a);

}  // namespace cfub
