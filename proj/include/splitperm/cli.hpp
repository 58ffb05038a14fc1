#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "splitperm/report.hpp"

namespace splitperm::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kContains = 1,  // `check` only: the permutation contains a pattern
  kUsage = 2,
  kGuardExceeded = 3,
};

/// Runs one command line (program name excluded). Data goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable pass/fail table.
std::string format_report(const VerificationReport& report);
/// {"passed":..,"checks":[..],"notes":[..]}
std::string report_json(const VerificationReport& report);

}  // namespace splitperm::cli
