#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcurl {

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SelftestOptions {
  /// Forwarded to SpaceOptions::vk_perturbation (fault injection).
  double vk_perturbation = 0.0;
};

/// Runs the invariant battery, printing one verdict line per check to `log` (if non-null).
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {}, std::ostream* log = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qcurl
