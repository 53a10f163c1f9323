#include "cfub/triangles.hpp"

#include <json.hpp>

namespace cfub {

std::string TriangleTable::to_csv() const {
    std::string out = "n,k,value\n";
    for (unsigned n = 0; n <= max_n_; ++n)
        for (unsigned k = 0; k <= n; ++k)
            out += std::to_string(n) + "," + std::to_string(k) + "," + rows_[n][k].to_string() + "\n";
    return out;
}

std::string TriangleTable::to_json() const {
    nlohmann::json j;
    j["kind"] = kind_ == TriangleKind::stirling2 ? "S" : "T";
    j["max_n"] = max_n_;
    auto rows = nlohmann::json::array();
    for (unsigned n = 0; n <= max_n_; ++n) {
        auto row = nlohmann::json::array();
        for (unsigned k = 0; k <= n; ++k) row.push_back(rows_[n][k].to_string());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

TriangleTable build_stirling2(unsigned max_n) {
    TriangleTable t(TriangleKind::stirling2, max_n);
    t.set(0, 0, Rational(1));
    for (unsigned n = 1; n <= max_n; ++n)
        for (unsigned k = 1; k <= n; ++k)
            t.set(n, k, Rational(static_cast<long>(k)) * t.at(n - 1, k) + t.at(n - 1, k - 1));
    return t;
}

TriangleTable build_central_T(unsigned max_n) {
    TriangleTable t(TriangleKind::central_T, max_n);
    t.set(0, 0, Rational(1));
    if (max_n >= 1) t.set(1, 1, Rational(1));
    for (unsigned n = 2; n <= max_n; ++n)
        for (unsigned k = n % 2 == 0 ? 2 : 1; k <= n; k += 2) {
            Rational quarter_k2(static_cast<long>(k) * static_cast<long>(k), 4);
            Rational v = quarter_k2 * t.at(n - 2, k);
            if (k >= 2) v += t.at(n - 2, k - 2);
            t.set(n, k, v);
        }
    return t;
}

Rational central_T_explicit(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    Rational sum(0);
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = binomial(k, j) * (Rational(static_cast<long>(k), 2) - Rational(static_cast<long>(j))).pow(n);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum / factorial(k);
}

}  // namespace cfub
