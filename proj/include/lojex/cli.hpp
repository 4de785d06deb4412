#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lojex {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_undefined = 2, exit_input = 3 };

/// Runs the tool on args (without the program name), writing results to out
/// and diagnostics to err. Subcommands: exponent, limit, roots, polygon.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lojex
