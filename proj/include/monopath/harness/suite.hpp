#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "monopath/harness/report.hpp"

namespace monopath::harness {

struct SuiteConfig {
  std::string suite = "acceptance";  // or "smoke"
  std::uint64_t seed = 1;
  int jobs = 1;
};

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  Json detail;
  double seconds = 0.0;
};

/// Criterion ids run by a suite.  Unknown names throw InvalidArgument.
std::vector<int> suite_criteria(const std::string& suite);

/// Runs one acceptance criterion (1..13) at the sizes of config.suite.
CriterionOutcome run_criterion(int id, const SuiteConfig& config);

/// Runs a whole suite and returns the report.  on_result sees each criterion
/// as it finishes.
Json run_suite(const SuiteConfig& config, const std::function<void(const CriterionOutcome&)>& on_result = {});

/// "PASS  3  title: summary"
std::string format_line(const CriterionOutcome& outcome);

}  // namespace monopath::harness
