#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace archpi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kBadArguments = 2,
  kPrecisionFailure = 3,
  kNoValidBound = 4,
};

/// Runs the archpi command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archpi::cli
