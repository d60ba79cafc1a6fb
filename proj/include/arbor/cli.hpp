#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arbor {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// usage errors and help text to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor
