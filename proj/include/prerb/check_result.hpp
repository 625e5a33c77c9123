#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace prerb {

struct CheckFailure {
  std::string witness;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::uint64_t total = 0;
  std::vector<CheckFailure> failures;
  bool pass() const { return failures.empty(); }
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

}  // namespace prerb
