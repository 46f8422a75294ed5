/** @file verify.hpp
 *  @brief Brute-force checks of the named structural statements at desk scale.
 *
 *  Every check runs over an explicitly budgeted instance space and reports
 *  pass/fail with a re-runnable counterexample on failure.  Budget
 *  exhaustion is reported as skipped, never as pass.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcat {

struct Budget {
  int maxPoints = 6;        // exhaustive partition checks
  int closureCap = 6;       // closure truncation bound
  std::int64_t window = 0;  // axiom window; 0 derives it from the data
  int instances = 200;      // randomized checks
  std::uint64_t seed = 1;
};

enum class CheckStatus { pass, fail, skipped };

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::int64_t instancesTried = 0;
  std::string counterexample;
  double elapsedSeconds = 0;

  std::string line() const;
};

/// Names of the catalog checks, in catalog order.
std::vector<std::string> checkNames();

/// Runs one catalog check; throws on an unknown name.
CheckReport runCheck(const std::string& name, const Budget& budget = {});

std::vector<CheckReport> runAllChecks(const Budget& budget = {});

}  // namespace pcat
