#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geodiscord::experiments {

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  double worst = 0.0;  ///< largest observed deviation
  double bound = 0.0;  ///< pass iff worst < bound
  bool passed = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::string format() const;
};

/// Runs the cross-module property suites with `samples` random cases each.
VerifyReport run_verification(std::uint64_t seed, std::size_t samples);

}  // namespace geodiscord::experiments
