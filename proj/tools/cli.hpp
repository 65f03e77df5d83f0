#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cutcell::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kCheckFailed = 2,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a:b:count" (inclusive, evenly spaced), "v1,v2,..." or "v".
std::vector<double> parse_range(const std::string& text);

}  // namespace cutcell::cli
