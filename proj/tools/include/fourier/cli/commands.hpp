#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourier::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation of the tool. `args` excludes the program name.
/// Returns 0 when every requested check passes, 1 when one fails and 2 for
/// usage or input errors (message on `err`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fourier::cli
