#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gapsets::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,  // not a gapset, OEIS mismatch, ...
  kUsageError = 2,
  kInvariantViolation = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. All output goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gapsets::cli
