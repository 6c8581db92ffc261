#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fipkit::cli {

/// Exit statuses shared by all subcommands.
enum ExitCode : int {
  kSuccess = 0,
  kParseError = 1,
  kValidationError = 2,
};

/// Runs `fipkit <args...>` (args exclude the program name). Normal output
/// goes to `out` unless -o is given; diagnostics and reports go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fipkit::cli
