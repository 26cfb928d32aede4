// Acceptance gate: runs the full named check battery and prints one line per
// check.  Exits nonzero when any check fails.  All comparisons inside the
// battery are exact; the per-check time budgets are pinned in the battery.

#include <cstdio>

#include "koszulkit/checks.hpp"

int main() {
  const std::vector<kzk::CheckResult> results = kzk::run_all_checks();
  int failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (!r.pass) ++failed;
    std::printf("[%s] %02zu %s (%.2fs, budget %.0fs)%s%s\n", r.pass ? "PASS" : "FAIL", i + 1,
                r.name.c_str(), r.seconds, r.limit_seconds, r.pass ? "" : ": ",
                r.pass ? "" : r.detail.c_str());
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
