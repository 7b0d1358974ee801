#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistbt {

/// Exit statuses of run_command.
enum ExitStatus : int { exit_ok = 0, exit_false = 1, exit_usage = 2, exit_budget = 3 };

/// Runs one command line (without the program name).  Expressions that are
/// not given with -e are read from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace twistbt
