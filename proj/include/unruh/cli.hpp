#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unruh::cli {

/// Exit codes: 0 success, 1 numeric convergence failure, 2 usage error.
enum ExitCode : int { ok = 0, numeric_failure = 1, usage_error = 2 };

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unruh::cli
