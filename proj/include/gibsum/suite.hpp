#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gibsum {

// Outcome of one acceptance criterion. A failure carries the exact inputs
// that broke it.
struct CriterionResult {
  int id = 0;
  std::string key;    // stable short name, e.g. "table-conformance"
  std::string title;  // one-line description
  bool passed = false;
  std::string detail;
  std::vector<std::string> counterexamples;
  double seconds = 0.0;

  friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

struct VerificationSummary {
  std::vector<CriterionResult> criteria;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double elapsed_seconds = 0.0;

  bool all_passed() const { return failed == 0; }
  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct Criterion {
  int id;
  std::string key;
  std::string title;
  std::function<CriterionResult()> run;
};

// The fourteen acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

// Wall-clock budget for the whole suite.
inline constexpr double kSuiteBudgetSeconds = 60.0;

// Runs the selected criteria (all when `only` is empty). `on_result` fires
// after each criterion, in order.
VerificationSummary run_acceptance(const std::set<int>& only = {},
                                   const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace gibsum
