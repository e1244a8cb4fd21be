#pragma once

// Cross-validation suites: every representation checked against every other.
// Each check reports a measured deviation, its threshold and the wall time.

#include <functional>
#include <string>
#include <vector>

namespace hypgreen::validation {

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: no limit
  bool passed = false;
  std::string note;
};

using Reporter = std::function<void(const CheckResult&)>;

/// representations, wronskian, fourier, gegenbauer, addition, limits.
const std::vector<std::string>& suite_names();
/// True for a suite name or "all".
bool is_suite(const std::string& name);

/// Runs one suite (or "all"). With loosen_to > 0 every threshold becomes
/// max(default, loosen_to). Results are reported in order as they complete.
std::vector<CheckResult> run_suite(const std::string& name, double loosen_to = 0.0, const Reporter& report = {});

// Individual checks, grouped as in the suites.
CheckResult check_representation_equivalence();
CheckResult check_odd_dual_forms();
CheckResult check_wronskian();
CheckResult check_wronskian_finite_difference();
CheckResult check_order_recurrence_casoratian();
CheckResult check_fourier_m0();
CheckResult check_fourier_general_m();
CheckResult check_fourier_resummation();
CheckResult check_gegenbauer_series();
CheckResult check_gegenbauer_ratio();
CheckResult check_jump_condition();
CheckResult check_harmonicity();
std::vector<CheckResult> check_conjecture();
CheckResult check_addition_theorem();
CheckResult check_euclidean_limit_H();
CheckResult check_euclidean_limit_series();
CheckResult check_euclidean_limit_d2();
CheckResult check_euclidean_limit_d3_m0();

/// One deterministic line: "PASS suite/name measured=... threshold=..." plus notes.
std::string format_result(const CheckResult& r);

} // namespace hypgreen::validation
