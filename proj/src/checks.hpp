#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqz {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;   // worst residual seen
  double tolerance = 0.0;  // threshold applied
};

// Operator-algebra, initial-state, unitarity, oracle-equivalence and
// xi_s(0) = 1 suites over the given spins. tolerance_scale in [0, 1]
// multiplies every tolerance; 1 runs the standard contract, smaller values
// tighten it (0 makes everything fail, which is the corruption hook used
// to verify the failure path).
std::vector<CheckResult> run_checks(const std::vector<std::int64_t>& twice_j_list,
                                    double tolerance_scale);

}  // namespace sqz
