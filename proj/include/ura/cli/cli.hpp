#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ura::cli {

enum ExitCode : int {
  kHolds = 0,
  kFails = 1,
  kUsage = 2,
  kPrecondition = 3,
  kInternal = 4,
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ura::cli
