#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one CLI invocation. `args` excludes the program name. Exit codes: 0 ok,
/// 1 domain error or report mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta_lab::cli
