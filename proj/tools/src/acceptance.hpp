#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlc/families.hpp"

namespace hyperlc::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240;
  // Run the criteria on worker threads where they do not depend on each other.
  bool parallel = false;
};

// Criteria 5 and 7 reuse the curves built by criteria 1-3, so the whole suite
// always runs together.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options = {});

/// One line per criterion: "PASS [1] name (0.12 s / 60 s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace hyperlc::cli
