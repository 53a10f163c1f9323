#include <doctest.h>

#include <cmath>
#include <complex>

#include "cfub/analytic.hpp"
#include "cfub/fubini.hpp"

using namespace cfub;

TEST_CASE("egf point values") {
    CHECK(std::abs(egf_value({0.0, 0.0}, 0.7) - std::complex<double>(1.0)) < 1e-15);
    CHECK(std::abs(egf_value({1.0, 0.0}, 0.0) - std::complex<double>(1.0)) < 1e-15);
    double t0 = 2.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK_THROWS(egf_value({t0, 0.0}, 1.0));
}

TEST_CASE("egf matches the truncated exact series") {
    std::complex<double> series = 0.0;
    double t = 0.1;
    for (unsigned m = 0; m <= 20; ++m)
        series += c_number(m).to_double() * std::pow(t, m) / std::tgamma(m + 1.0);
    CHECK(std::abs(egf_value({t, 0.0}, 1.0) - series) < 1e-12);
}

TEST_CASE("integral representation vs exact") {
    CHECK(std::fabs(integral_representation(1, 0.5, 512) - 0.5) < 1e-8);
    CHECK(std::fabs(integral_representation(2, 0.5, 512) - 0.5) < 1e-8);
    CHECK(std::fabs(integral_representation(4, 0.3, 512) - 0.3744) < 1e-8);
}

TEST_CASE("quadrature panel convergence") {
    for (unsigned n : {2u, 5u, 8u}) {
        double a = integral_representation(n, 0.5, 256);
        double b = integral_representation(n, 0.5, 512);
        CHECK(std::fabs(a - b) < 1e-10);
    }
}

TEST_CASE("dominant poles") {
    auto poles = find_dominant_poles(2);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0].location.real() == doctest::Approx(0.9624236501).epsilon(1e-9));
    CHECK(std::fabs(poles[0].location.imag()) < 1e-12);
    CHECK(poles[0].residue.real() == doctest::Approx(-0.8944271910).epsilon(1e-9));
    CHECK(poles[1].modulus == doctest::Approx(6.3562).epsilon(1e-4));
    double lnphi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(std::abs(poles[1].location - std::complex<double>(-2.0 * lnphi, 2.0 * M_PI)) < 1e-10);
    CHECK_THROWS(find_dominant_poles(3));
}

TEST_CASE("asymptotic estimate vs exact numbers") {
    double e10 = asymptotic_estimate(10);
    CHECK(std::fabs(4946282.0 / e10 - 1.0) < 0.01);
    double e16 = asymptotic_estimate(16);
    CHECK(std::fabs(35887046307866.0 / e16 - 1.0) < 1e-4);
}

TEST_CASE("closed form agrees with the pole/residue sum") {
    auto poles = find_dominant_poles(2);
    for (unsigned n = 0; n <= 40; ++n) {
        double a = asymptotic_estimate(n);
        double b = asymptotic_estimate_from_poles(n, poles);
        CHECK(std::fabs(a - b) < 1e-10 * std::fabs(a));
    }
}

TEST_CASE("asymptotic report") {
    CHECK(asymptotic_report({}).empty());
    auto reports = asymptotic_report({10});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].ratio > 0.99);
    CHECK(reports[0].ratio < 1.01);
    auto two = asymptotic_report({16, 24});
    // the two-pole estimate is already at double noise by n=16
    CHECK(std::fabs(two[1].ratio - 1.0) <= std::fabs(two[0].ratio - 1.0) + 1e-12);
    CHECK(two[0].to_json().find("35887046307866") != std::string::npos);
}

TEST_CASE("log-space estimate matches the plain one in range") {
    for (unsigned n : {5u, 16u, 30u})
        CHECK(std::exp(asymptotic_estimate_log(n)) ==
              doctest::Approx(asymptotic_estimate(n)).epsilon(1e-12));
}
