#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rootgraded {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every check of the desk-scale verification suite.  Deterministic for a
// fixed seed; the seed only drives the mutation draws.
std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed = 0);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace rootgraded
