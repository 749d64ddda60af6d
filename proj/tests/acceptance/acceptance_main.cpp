// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <iostream>

#include "gibsum/suite.hpp"

int main() {
  using gibsum::CriterionResult;
  const auto summary = gibsum::run_acceptance({}, [](const CriterionResult& r) {
    std::printf("%s %2d %-30s %s (%.3f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.key.c_str(),
                r.detail.c_str(), r.seconds);
    for (const auto& ce : r.counterexamples) std::printf("       counterexample: %s\n", ce.c_str());
    std::fflush(stdout);
  });
  const bool within_budget = summary.elapsed_seconds < gibsum::kSuiteBudgetSeconds;
  std::printf("%zu/%zu passed in %.2f s (budget %.0f s)%s\n", summary.passed, summary.criteria.size(),
              summary.elapsed_seconds, gibsum::kSuiteBudgetSeconds, within_budget ? "" : " OVER BUDGET");
  return summary.all_passed() && within_budget ? 0 : 1;
}
