#include "cfub/rational.hpp"

#include <cmath>

namespace cfub {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

double Rational::log_abs() const {
    if (is_zero()) throw std::domain_error("Rational: log of zero");
    long en, ed;
    double mn = mpz_get_d_2exp(&en, v_.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
    return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
           (static_cast<double>(en) - static_cast<double>(ed)) * std::log(2.0);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace cfub
