#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdke {

/// Exit codes: 0 success, 1 domain error or failed verification, 2 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`; usage text and diagnostics go to `err`; '-' inputs read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace sdke
