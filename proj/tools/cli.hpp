#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace somix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// Runs one command line (without the program name). Results go to `out`;
// failures print a single `error: <kind>: <reason>` line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace somix::cli
