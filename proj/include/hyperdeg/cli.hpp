#pragma once

#include <ostream>

namespace hyperdeg {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the `hyperdeg` command line. All output goes to `out` and `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperdeg
