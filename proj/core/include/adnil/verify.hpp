#pragma once

#include <adnil/bigint.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace adnil {

struct Counterexample {
  int n = 0;
  std::string input;  // partition literal, path, or parameter list
  std::string expected;
  std::string got;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  int n_max = 8;
  int jobs = 0;
  std::vector<std::string> only;  // empty: every check
  /// Replaces the reflection-sum count inside count_agreement. Only for
  /// exercising the failure path.
  std::function<BigInt(int n, int h)> reflection_override;
};

/// Largest n_max accepted by run_verification.
inline constexpr int kVerifyHardCap = 12;

/// Names in execution order.
const std::vector<std::string>& verification_checks();

/// Runs the selected checks for every n in 1..n_max. Throws
/// std::invalid_argument for an unknown check name or n_max outside 1..12.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

// Individual checks. `n_max` bounds the exhaustive part of each.
CheckResult check_example_class();
CheckResult check_fillings_n4();
CheckResult check_class_agreement(int n_max, int jobs);
CheckResult check_decomposition(int n_max, int jobs);
CheckResult check_count_agreement(int n_max, int jobs,
                                  const std::function<BigInt(int, int)>& reflection_override = {});
CheckResult check_closed_forms(int n_max, int jobs);
CheckResult check_bijection(int n_max, int jobs);
CheckResult check_qt_catalan(int n_max, int jobs);
CheckResult check_extremal(int n_max, int jobs);
CheckResult check_affine(int n_max, int jobs);
CheckResult check_monotonicity(int n_max, int jobs);

}  // namespace adnil
