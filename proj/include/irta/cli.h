#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irta {

/// Exit codes: 0 affirmative answer, 1 negative answer (details on `out`),
/// 2 usage or input error (message on `err`).
enum ExitCode : int { kExitYes = 0, kExitNo = 1, kExitError = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace irta
