#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgebasis {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerdictFail = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs the command line tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace edgebasis
