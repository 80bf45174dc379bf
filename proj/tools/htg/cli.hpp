#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace htg::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kParseError = 2,
  kBadParams = 3,
  kWrongDimension = 4,
  kIoError = 5,
};

/// Runs `htg <args...>` (args excludes the program name). Summary lines and
/// command output go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htg::cli
