#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sbpdct {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;  ///< random inputs per scenario for the 8-point checks
};

/// Runs the full property suite. Output depends only on the options.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

std::string render_verification(const std::vector<CheckResult>& checks);

}  // namespace sbpdct
