#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wittkit {

// Sizes for the verification batteries. The defaults are the full windows.
struct BatteryConfig {
  std::uint64_t seed = 0x5eed2024;
  std::uint64_t max_total = 12;    // compositions checked against the word oracle
  std::size_t max_letters = 4;
  std::uint64_t closed_form_m = 50;
  std::size_t identity_cases = 200;
  std::size_t integrality_cases = 200;
  std::size_t reciprocal_cases = 50;
  std::size_t dominance_cases = 50;
  std::size_t expansion_cases = 100;
  int artin_digits = 12;
  int analytic_digits = 15;
  int b_chi_digits = 8;
  std::uint64_t direct_limit = 1000000;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

CheckResult check_oracle_equivalence(const BatteryConfig& cfg);
CheckResult check_closed_forms(const BatteryConfig& cfg);
CheckResult check_identity_battery(const BatteryConfig& cfg);
CheckResult check_positivity_battery(const BatteryConfig& cfg);
CheckResult check_monotonicity_windows(const BatteryConfig& cfg);
CheckResult check_cyclotomic_battery(const BatteryConfig& cfg);
CheckResult check_expansion_uniqueness(const BatteryConfig& cfg);
CheckResult check_artin_constant(const BatteryConfig& cfg);
CheckResult check_analytic_crosschecks(const BatteryConfig& cfg);

// Scopes: combinatorial, identities, expansion, analytic, all.
std::vector<CheckResult> run_batteries(const std::string& scope, const BatteryConfig& cfg);

// Shrinks the default windows to fit `budget`; budget 0 selects nothing.
BatteryConfig config_for_budget(std::uint64_t budget);

}  // namespace wittkit
