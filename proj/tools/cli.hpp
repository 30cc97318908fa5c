#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ucayley::cli {

/// Exit codes: 0 definite answer, 1 usage or semantic error, 2 inconclusive within budget.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one `ucayley` invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ucayley::cli
