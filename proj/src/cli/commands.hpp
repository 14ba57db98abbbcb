#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace telhaz::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kValidationError = 2,
  kNotDefensible = 3,
};

// Entry point shared by the telhaz executable and the tests. `args` excludes
// the program name. Tables go to `out` (or to --output), diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace telhaz::cli
