#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace socksort {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the `socksort` binary and the tests. `args`
/// excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace socksort
