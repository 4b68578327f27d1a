#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhocalc::tools {

enum ExitCode : int { kOk = 0, kValidation = 1, kComputation = 2 };

/// Runs `rhocalc` with argv[1..] in args; stdin feeds the zoo subcommand.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rhocalc::tools
