#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace subconv {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  bool passed() const noexcept { return failures == 0; }
};

// Runs every built-in property suite at fixed seeds and returns one result
// per suite. Each suite name appears exactly once.
std::vector<SuiteResult> run_selftest();

}  // namespace subconv
