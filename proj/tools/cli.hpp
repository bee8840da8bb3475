#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace suclab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kMalformedInput = 2,
  kVerificationFailure = 3,
};

/// Runs the command line `args` (without the program name). Standard
/// streams are passed in so tests can capture them.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace suclab::cli
