#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qlhp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerdictMismatch = 2;

/// Runs `qlhp <args...>` (args exclude the program name).
///
///   check <name> [--format text|json]
///   list
///   vdim --weights W --genus G --markings muM:N[,muM:N...] [--format text|json]
///   convexity --weights W --degree K [--format text|json]
///   ring-eval --relations R --expr E [--format text|json]
///
/// Exit codes: 0 success (for check: the expected verdict), 1 usage or input
/// error, 2 verdict differs from the expected one.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlhp::cli
