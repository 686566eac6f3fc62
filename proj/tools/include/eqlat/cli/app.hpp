#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqlat::cli {

enum ExitCode : int {
  exit_pass = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_exhausted = 3,
};

/// Runs the command line `args` (args[0] is the program name). Output that a
/// command produces goes to `out` unless --out names a file; diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqlat::cli
