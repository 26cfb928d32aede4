#pragma once

// Named end-to-end check batteries over the built-in fixtures.  Each check
// re-derives its expected values through at least two independent code paths
// where the design calls for it and reports exact pass/fail with a one-line
// diagnostic; runtime budgets are recorded alongside the results.

#include <string>
#include <vector>

namespace kzk {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure diagnostic or a short success summary
  double seconds = 0.0;
  double limit_seconds = 0.0;  // budget; exceeding it fails the check
};

// Explicit resolution, syzygy table and homology products for the Plucker
// quotient of the 2-plane Grassmannian of 5-space.  max_weight >= 5 controls
// the exactness window of the resolution check.
std::vector<CheckResult> run_g25_checks(int max_weight);

// The full acceptance battery, eleven named checks.  With stop_on_first the
// battery returns at the first failed check.
std::vector<CheckResult> run_all_checks(bool stop_on_first = false);

}  // namespace kzk
