#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aic::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kBudgetExceeded = 3,
  kVerifyMismatch = 4,
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aic::cli
