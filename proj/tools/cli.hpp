#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace admon::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (args excludes the program name). Returns the exit
/// status: 0 success/PASS, 1 FAIL or NOT_JOINABLE, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace admon::cli
