#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hypzeta::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitStatus : int {
  kOk = 0,
  kInternalFailure = 1,
  kUsageError = 2,
  kPoleError = 3,
  kMismatch = 4,
  kDegenerateData = 5,
};

/// Runs the command line `args` (without the program name), writing data to
/// `out` and log lines to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypzeta::cli
