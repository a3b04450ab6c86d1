#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace smoothorb::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kCounterexample = 3,
};

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smoothorb::cli
