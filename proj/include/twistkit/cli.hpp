#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 verification falsified, 2 bad input,
//   3 no twist within the cutoffs, 4 inconsistent system.

#include <iosfwd>
#include <string>
#include <vector>

namespace twistkit {

enum ExitCode : int {
  exit_ok = 0,
  exit_falsified = 1,
  exit_bad_input = 2,
  exit_infeasible = 3,
  exit_inconsistent = 4,
};

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistkit
