#pragma once

#include <string>
#include <vector>

#include "cfub/rational.hpp"

namespace cfub {

enum class TriangleKind { stirling2, central_T };

/// Lower-triangular table of exact values, built eagerly to max_n and
/// immutable afterwards. Entries with k > n read as zero.
class TriangleTable {
public:
    TriangleTable(TriangleKind kind, unsigned max_n)
        : kind_(kind), max_n_(max_n), rows_(max_n + 1) {
        for (unsigned n = 0; n <= max_n; ++n) rows_[n].assign(n + 1, Rational(0));
    }

    TriangleKind kind() const { return kind_; }
    unsigned max_n() const { return max_n_; }

    Rational at(unsigned n, unsigned k) const {
        if (n > max_n_) throw std::out_of_range("TriangleTable: n exceeds max_n");
        if (k > n) return Rational(0);
        return rows_[n][k];
    }

    void set(unsigned n, unsigned k, const Rational& v) { rows_.at(n).at(k) = v; }

    std::string to_csv() const;
    std::string to_json() const;

private:
    TriangleKind kind_;
    unsigned max_n_;
    std::vector<std::vector<Rational>> rows_;
};

/// Stirling numbers of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1).
TriangleTable build_stirling2(unsigned max_n);

/// Central factorial numbers of the second kind via
/// T(n,k) = (k/2)^2 T(n-2,k) + T(n-2,k-2), stepping n by 2 from the
/// base rows T(0,0) = 1 and T(1,1) = 1. Mixed-parity entries stay 0.
TriangleTable build_central_T(unsigned max_n);

/// T(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k/2 - j)^n, evaluated exactly.
Rational central_T_explicit(unsigned n, unsigned k);

}  // namespace cfub
