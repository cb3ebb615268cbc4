#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pentaglue {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInconclusive = 1,
  kExitInvalid = 2,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pentaglue
