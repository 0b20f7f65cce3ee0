#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsearch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;  // also "not isomorphic" for `iso`
inline constexpr int kExitUsage = 2;

// Runs one command line (args[0] is the program name) against the given
// streams and returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gsearch::cli
