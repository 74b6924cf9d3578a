#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twodir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxLevel = 14;

/// Runs one command line (args excludes the program name). Normal output goes to
/// `out`, diagnostics and usage text to `err`. Returns the process exit code:
/// 0 ok, 1 domain error (missing eigenvalue, singular moment system, ...),
/// 2 usage, file or mask-format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twodir::cli
