#include <doctest.h>

#include <random>

#include "cfub/operators.hpp"

using namespace cfub;

namespace {

std::mt19937 rng(98127);

Poly random_poly(int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 8);
    int d = deg(rng);
    std::vector<Rational> cs;
    for (int i = 0; i <= d; ++i) cs.push_back(Rational(num(rng), den(rng)));
    return Poly(std::move(cs));
}

Poly monomial(unsigned n) { return Poly::monomial(Rational(1), n); }

}  // namespace

TEST_CASE("shift") {
    CHECK(shift(monomial(2), Rational(1)) == Poly{Rational(1), Rational(2), Rational(1)});
    Poly p = random_poly(8);
    CHECK(shift(p, Rational(0)) == p);
    CHECK(shift(monomial(1), Rational(-1, 2)) == Poly{Rational(-1, 2), Rational(1)});
}

TEST_CASE("forward difference") {
    CHECK(forward_difference(monomial(2)) == Poly{Rational(1), Rational(2)});
    CHECK(forward_difference(Poly(Rational(5))).is_zero());
    CHECK(forward_difference(monomial(3)) == Poly{Rational(1), Rational(3), Rational(3)});
}

TEST_CASE("central difference") {
    CHECK(central_difference(monomial(2)) == Poly{Rational(0), Rational(2)});
    CHECK(central_difference(Poly(Rational(3))).is_zero());
    CHECK(central_difference(central_factorial_poly(4)) ==
          Rational(4) * central_factorial_poly(3));
}

TEST_CASE("factorial basis polynomials") {
    CHECK(falling_factorial_poly(0) == Poly::one());
    CHECK(falling_factorial_poly(2) == Poly{Rational(0), Rational(-1), Rational(1)});
    CHECK(falling_factorial_poly(3) ==
          Poly{Rational(0), Rational(2), Rational(-3), Rational(1)});
    CHECK(central_factorial_poly(0) == Poly::one());
    CHECK(central_factorial_poly(1) == monomial(1));
    CHECK(central_factorial_poly(2) == monomial(2));
    CHECK(central_factorial_poly(3) ==
          Poly{Rational(0), Rational(-1, 4), Rational(0), Rational(1)});
}

TEST_CASE("expand_in_basis examples") {
    auto s2 = expand_in_basis(monomial(2), BasisKind::falling_factorial);
    CHECK(s2 == std::vector<Rational>{Rational(0), Rational(1), Rational(1)});
    auto t4 = expand_in_basis(monomial(4), BasisKind::central_factorial);
    CHECK(t4 == std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)});
    auto t3 = expand_in_basis(monomial(3), BasisKind::central_factorial);
    CHECK(t3 == std::vector<Rational>{Rational(0), Rational(1, 4), Rational(0), Rational(1)});
}

TEST_CASE("operator identities") {
    // central difference factors through the half-step shift
    for (int i = 0; i < 40; ++i) {
        Poly p = random_poly(12);
        CHECK(central_difference(p) == forward_difference(shift(p, Rational(-1, 2))));
    }
    // delta lowers central factorials: delta x^[n] = n x^[n-1]
    for (unsigned n = 1; n <= 20; ++n)
        CHECK(central_difference(central_factorial_poly(n)) ==
              Rational(static_cast<long>(n)) * central_factorial_poly(n - 1));
    // binomial expansion of the forward difference of a monomial
    for (unsigned n = 1; n <= 20; ++n) {
        Poly expect;
        for (unsigned k = 0; k < n; ++k) expect += Poly::monomial(binomial(n, k), k);
        CHECK(forward_difference(monomial(n)) == expect);
    }
}

TEST_CASE("expand_in_basis round-trips (randomized)") {
    for (BasisKind basis : {BasisKind::monomial, BasisKind::falling_factorial,
                            BasisKind::central_factorial}) {
        for (int i = 0; i < 25; ++i) {
            Poly p = random_poly(10);
            auto cs = expand_in_basis(p, basis);
            Poly back;
            for (unsigned k = 0; k < cs.size(); ++k) back += cs[k] * basis_poly(basis, k);
            CHECK(back == p);
        }
    }
}

TEST_CASE("central factorial expansion parity") {
    for (unsigned n = 0; n <= 20; ++n) {
        auto cs = expand_in_basis(monomial(n), BasisKind::central_factorial);
        for (unsigned k = 0; k < cs.size(); ++k)
            if ((n - k) % 2 == 1) CHECK(cs[k].is_zero());
    }
}
