#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cfub/rational.hpp"

namespace cfub {

enum class CheckStatus { pass, fail, measured };

struct VerifyReport {
    std::string name;
    std::string range;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // first counterexample when status is fail
};

/// Deliberate single-entry corruption, used to confirm that the
/// cross-verification actually detects disagreement.
struct Injection {
    std::optional<std::tuple<unsigned, unsigned, Rational>> t_entry;  // T(n,k) := value
    std::optional<std::pair<unsigned, Rational>> r_coeff;  // R(j) := value * x
};

/// Runs every identity check at the given range (fixed-range checks are
/// capped at their stated bounds). Pure; safe to run concurrently.
std::vector<VerifyReport> run_verification(unsigned max_n, const Injection& inj = {});

bool all_passed(const std::vector<VerifyReport>& reports);

std::string status_name(CheckStatus s);

}  // namespace cfub
