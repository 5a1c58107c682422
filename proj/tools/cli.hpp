#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscsteer::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

// Runs the command line args (without the program name), writing results to
// out (unless --output is given) and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oscsteer::cli
