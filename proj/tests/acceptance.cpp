// One pass/fail line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <cstdio>
#include <exception>

#include "wittkit/batteries.hpp"

using namespace wittkit;

int main() {
  const BatteryConfig cfg;
  using Check = CheckResult (*)(const BatteryConfig&);
  const Check checks[] = {check_oracle_equivalence,   check_closed_forms,       check_identity_battery,
                          check_positivity_battery,   check_monotonicity_windows, check_cyclotomic_battery,
                          check_expansion_uniqueness, check_artin_constant,      check_analytic_crosschecks};
  int failed = 0;
  for (int i = 0; i < 9; ++i) {
    CheckResult r;
    try {
      r = checks[i](cfg);
    } catch (const std::exception& e) {
      r.name = "criterion";
      r.detail = std::string("threw: ") + e.what();
    }
    std::printf("[%s] %d. %s (%.1fs): %s\n", r.pass ? "PASS" : "FAIL", i + 1, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
