#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace isingcn::cli {

/// Exit codes: 0 success, 1 invalid configuration or failed checks,
/// 2 simulation error (addressing or numerical integrity).
int cmd_compile(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle_check(const RunConfig& config, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
};

/// The checks behind cmd_oracle_check, exposed for tests.
std::vector<CheckResult> run_oracle_checks(const RunConfig& config);

}  // namespace isingcn::cli
