#pragma once

#include <iosfwd>

namespace mtc::cli {

/// Process exit codes. The four verdicts of the extended analysis get
/// distinct codes so scripts can branch on them.
enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kWeakPass = 2,
  kInconc = 3,
  kUsage = 64,
  kBudget = 65,
};

/// Runs the command line `argv` and returns the exit code. Regular output
/// goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtc::cli
