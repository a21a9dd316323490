#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permstat::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInternal = 3;

// Parses `args` (without the program name), runs one subcommand and returns
// its exit code. Nothing is written to the process streams directly.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
