#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wloc {

// Exit codes of the command line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCompute = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerify = 3;

// Runs one invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wloc
