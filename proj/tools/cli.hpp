#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aclab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kNumerical = 3,
  kInfeasible = 4,
};

/// Runs the command line; argv[0] is the program name. Output goes to out
/// unless --output names a file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aclab::cli
