#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eccb::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsageError = 2;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace eccb::cli
