#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subrank::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kPole = 2, kInput = 3, kBudget = 4 };

// Runs the subrank command line; args exclude the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Maps the active exception to an exit code and prints its message to err.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace subrank::cli
