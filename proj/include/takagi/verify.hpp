#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace takagi {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // short note: counts, a counterexample, or empty
};

/// Named invariant suites: arith, takagi, levels, omega, measure, dim, or
/// all.  Deterministic for a fixed seed.  Throws std::invalid_argument on
/// an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace takagi
