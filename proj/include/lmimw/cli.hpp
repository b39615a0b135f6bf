#pragma once

#include <iosfwd>

namespace lmimw {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitGuard = 3,
};

/// Runs the lmimw command line. Results go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lmimw
