#pragma once

// The `mnring` command line, callable in-process for tests.
//
// Exit codes: 0 success, 1 mathematical failure (division by zero, a failed
// check), 2 usage error (bad flags, syntax errors, out-of-range indices).

#include <iosfwd>
#include <string>
#include <vector>

namespace mnr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mnr::cli
