#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cfub/rational.hpp"

namespace cfub {

/// Dense univariate polynomial with exact rational coefficients.
/// Canonical form: the highest-index stored coefficient is nonzero;
/// the zero polynomial stores an empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) : coeffs_{c} { trim(); }
    Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    /// c * x^k
    static Poly monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the stored range.
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x0) const;
    Poly derivative() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Exact quotient p / x^r. Throws if p is not divisible by x^r.
    Poly divide_by_power_of_x(std::size_t r) const;

    /// Substitutes -x for x.
    Poly reflect() const;

    double eval_double(double x0) const;

    /// Monomial-sum rendering, e.g. "2 x^2+24 x^4", "1/4 x", "0".
    std::string to_plain_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

}  // namespace cfub
