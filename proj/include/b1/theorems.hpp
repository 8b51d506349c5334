#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "b1/algebra.hpp"
#include "b1/monoid.hpp"

namespace b1 {

enum class VerdictStatus { Pass, Fail, Skipped };

std::string_view to_string(VerdictStatus s);

struct Verdict {
  std::string tag;
  std::string statement;
  VerdictStatus status = VerdictStatus::Pass;
  std::string detail;  // first counterexample, or the reason for a skip
};

struct CheckOptions {
  Budget budget;
  bool oracle = false;            // add the brute-force cross-validation verdicts
  std::optional<Monoid> monoid;   // set when the algebra is F(M)
};

/// Tags of the verdicts check_theorems always emits, in order.
const std::vector<std::string>& theorem_tags();

/// Tags added when CheckOptions::oracle is set.
const std::vector<std::string>& oracle_tags();

/// Runs every structural check on `a` (and on F(M) when a monoid is given, in
/// which case `a` must be F(M)). Checks that cannot run report Skipped with
/// the reason; nothing is omitted.
std::vector<Verdict> check_theorems(const Algebra& a, const CheckOptions& options = {});

}  // namespace b1
