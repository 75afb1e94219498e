#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indec::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
enum ExitCode : int { Success = 0, VerificationFailed = 1, UsageError = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace indec::cli
