#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locinv {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kMalformedInput = 3 };

/// Runs the command line (without the program name), writing to out and err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locinv
