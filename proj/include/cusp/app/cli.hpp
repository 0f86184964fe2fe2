#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cusp::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitObstructed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Reports go to out,
/// diagnostics to err. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cusp::app
