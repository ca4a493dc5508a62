#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logburn::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs the command line `args` (without the program name), reading "-"
/// arguments from `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace logburn::cli
