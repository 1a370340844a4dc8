#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taumax::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kSolverFailure = 3,
  kClaimFailure = 4,
};

/// Runs one CLI invocation. `args` excludes the program name. Output goes to
/// `out` unless --out names a file; diagnostics go to `err`. The default
/// format is a table when `out_is_terminal`, csv otherwise.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_terminal = false);

}  // namespace taumax::cli
