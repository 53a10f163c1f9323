#include <doctest.h>

#include <json.hpp>

#include <vector>

#include "cfub/operators.hpp"
#include "cfub/triangles.hpp"

using namespace cfub;

namespace {

// Brute-force count of set partitions of {1..n} into exactly k nonempty
// blocks, by enumerating all k^n labeled assignments and dividing out the
// block relabelings. Independent of the recurrence under test.
long stirling_brute(unsigned n, unsigned k) {
    if (k == 0) return n == 0 ? 1 : 0;
    long count = 0;
    std::vector<unsigned> assign(n, 0);
    while (true) {
        std::vector<bool> used(k, false);
        for (unsigned a : assign) used[a] = true;
        bool onto = true;
        for (bool u : used) onto = onto && u;
        if (onto) ++count;
        unsigned i = 0;
        for (; i < n; ++i) {
            if (++assign[i] < k) break;
            assign[i] = 0;
        }
        if (i == n) break;
    }
    long kfact = 1;
    for (unsigned i = 2; i <= k; ++i) kfact *= i;
    return count / kfact;
}

}  // namespace

TEST_CASE("stirling2 table") {
    auto s = build_stirling2(8);
    CHECK(s.at(0, 0) == Rational(1));
    CHECK(s.at(4, 2) == Rational(stirling_brute(4, 2)));
    CHECK(s.at(4, 2) == Rational(7));
    CHECK(s.at(3, 5) == Rational(0));
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(s.at(n, k) == Rational(stirling_brute(n, k)));
}

TEST_CASE("central T table") {
    auto t = build_central_T(8);
    CHECK(t.at(4, 2) == Rational(1));
    CHECK(t.at(6, 4) == Rational(5));
    CHECK(t.at(3, 1) == Rational(1, 4));
    CHECK(t.at(2, 0) == Rational(0));
}

TEST_CASE("central T explicit sum") {
    CHECK(central_T_explicit(0, 0) == Rational(1));
    CHECK(central_T_explicit(4, 4) == Rational(1));
    CHECK(central_T_explicit(5, 3) == Rational(5, 2));
    CHECK(central_T_explicit(2, 5) == Rational(0));
    CHECK(central_T_explicit(5, 2) == Rational(0));
}

TEST_CASE("three T routes agree to n=30") {
    auto t = build_central_T(30);
    for (unsigned n = 0; n <= 30; ++n) {
        auto basis = expand_in_basis(Poly::monomial(Rational(1), n), BasisKind::central_factorial);
        for (unsigned k = 0; k <= n; ++k) {
            Rational via_basis = k < basis.size() ? basis[k] : Rational(0);
            CHECK(t.at(n, k) == central_T_explicit(n, k));
            CHECK(t.at(n, k) == via_basis);
        }
    }
}

TEST_CASE("stirling2 matches basis expansion to n=30") {
    auto s = build_stirling2(30);
    for (unsigned n = 0; n <= 30; ++n) {
        auto basis = expand_in_basis(Poly::monomial(Rational(1), n), BasisKind::falling_factorial);
        for (unsigned k = 0; k <= n; ++k)
            CHECK(s.at(n, k) == (k < basis.size() ? basis[k] : Rational(0)));
    }
}

TEST_CASE("serialization") {
    auto t = build_central_T(4);
    CHECK(t.to_csv().find("4,2,1\n") != std::string::npos);
    CHECK(t.to_csv().rfind("n,k,value\n", 0) == 0);

    auto j = nlohmann::json::parse(t.to_json());
    CHECK(j["kind"] == "T");
    CHECK(j["rows"][4][2] == "1");
    CHECK(j["rows"][3][1] == "1/4");

    // JSON round-trip recovers the table values
    auto t2 = build_stirling2(6);
    auto j2 = nlohmann::json::parse(t2.to_json());
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(Rational::from_string(j2["rows"][n][k].get<std::string>()) == t2.at(n, k));
}
