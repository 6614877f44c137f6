#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace sawstrip::cli {

enum ExitCode : int { ok = 0, check_failed = 1, config_error = 2, capacity_error = 3, solver_error = 4 };

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

}  // namespace sawstrip::cli
