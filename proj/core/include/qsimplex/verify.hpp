#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsimplex {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..11). Exceptions are caught and reported
/// as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = 0);

std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);

/// "PASS [ 1] title: detail" or "FAIL [ 1] title: detail".
std::string format_result(const CriterionResult& r);

}  // namespace qsimplex
