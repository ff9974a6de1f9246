#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycshift::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` or to the file named by --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycshift::cli
