#pragma once

#include <string>
#include <vector>

#include "rhocalc_tools/serialize.hpp"

namespace rhocalc::tools {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Deterministic evidence; never contains timings.
  Json detail;
  /// Wall time, reported only as metadata.
  double seconds = 0;
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion (1..11).
CriterionResult run_criterion(int id, unsigned jobs = 1);

/// Runs the listed criteria in order.
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, unsigned jobs = 1);

/// {"criteria": [...], "passed": n, "failed": m}; with_timing adds a
/// "seconds" field per criterion.
Json criteria_json(const std::vector<CriterionResult>& results, bool with_timing = false);

/// "criterion 4: PASS  Fourier machinery".
std::string summary_line(const CriterionResult& result);

}  // namespace rhocalc::tools
