#pragma once

#include <functional>
#include <string>
#include <vector>

#include "invol/permgroup.hpp"

namespace invol::verify {

enum class Scale { small, full };

struct BatteryOptions {
  /// `small` shrinks the sweeps and random suites; `full` runs them at size.
  Scale scale = Scale::full;
  /// Adds |Aut(Sym(6))| = 1440 and the T_4 laws.
  bool stretch = false;
  GroupOptions group;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Runs the verification battery. `on_result` is called after each check finishes.
std::vector<CheckResult> run_battery(const BatteryOptions& options,
                                     const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace invol::verify
