#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffsqfree::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,
  kExitCheckFailed = 2,
  kExitNonconstantLc = 3,
  kExitOverflow = 4,
};

/// Runs one ffsqfree command. `args` excludes the program name. Reports
/// written to "-" go to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffsqfree::cli
