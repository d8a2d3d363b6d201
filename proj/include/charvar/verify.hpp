#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charvar {

struct RunConfig {
  std::uint64_t seed = 20240601;
  double tolerance = 1e-9;
  long count = 0;  // 0: the suite's specified sample count
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// The named verification suites binding the structure theorems:
// components, switch-involution, invariance, gti-equivalence,
// reduction-termination, hyperbolicity-scan, e0-dichotomy, domination,
// omega-dynamics, trace-variety.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);
std::vector<SuiteResult> run_all_suites(const RunConfig& cfg);

}  // namespace charvar
