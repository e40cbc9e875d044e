#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stw::cli {

inline constexpr int kExitConfirmed = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stw::cli
