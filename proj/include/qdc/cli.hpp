#pragma once

// Command-line front end; usable in-process for tests.

#include <iosfwd>
#include <string>
#include <vector>

namespace qdc {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // check failure or violated hypothesis
  kExitInvalidInput = 2,
  kExitBelowThreshold = 3,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qdc
