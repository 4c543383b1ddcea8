#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace secmon::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kProtocol = 3,
  kVerification = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secmon::cli
