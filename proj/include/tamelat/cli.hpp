#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tamelat::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;          // pass or not applicable
inline constexpr int kExitFalsified = 1;   // a proven identity failed, or an oracle disagreed
inline constexpr int kExitBudget = 2;      // node budget or oracle box ceiling exceeded
inline constexpr int kExitUsage = 64;      // bad arguments or malformed input data

/// Runs the command line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tamelat::cli
