#pragma once

#include <functional>
#include <string>

namespace rgap {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured residual against its bound
};

/// Runs the built-in oracle and property checks, reporting each through
/// `report`. Returns the number of failed checks.
int run_selftest(const std::function<void(const SelftestResult&)>& report);

}  // namespace rgap
