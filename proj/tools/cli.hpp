#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holoroot::cli {

enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  usage_error = 2,
  io_error = 3,
  newton_failed = 4,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holoroot::cli
