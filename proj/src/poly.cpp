#include "cfub/poly.hpp"

#include <stdexcept>

namespace cfub {

Poly Poly::monomial(const Rational& c, std::size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> cs(k + 1, Rational(0));
    cs[k] = c;
    return Poly(std::move(cs));
}

Rational Poly::eval(const Rational& x0) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
    return Poly(std::move(out));
}

Poly Poly::divide_by_power_of_x(std::size_t r) const {
    if (r == 0) return *this;
    if (is_zero()) return Poly();
    if (coeffs_.size() < r)
        throw std::domain_error("Poly: not divisible by x^" + std::to_string(r));
    for (std::size_t i = 0; i < r; ++i)
        if (!coeffs_[i].is_zero())
            throw std::domain_error("Poly: not divisible by x^" + std::to_string(r));
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<long>(r), coeffs_.end()));
}

Poly Poly::reflect() const {
    std::vector<Rational> out(coeffs_);
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return Poly(std::move(out));
}

double Poly::eval_double(double x0) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x0 + it->to_double();
    return acc;
}

std::string Poly::to_plain_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? "-" : "+";
        }
        bool unit = (mag == Rational(1));
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string() + " ";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace cfub
