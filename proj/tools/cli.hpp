#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ricci::cli {

/// Exit codes: 0 success, 1 a violation (or a requested negative-curvature
/// check) was found, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ricci::cli
