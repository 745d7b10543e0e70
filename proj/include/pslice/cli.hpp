#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pslice {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

/// Runs the tool on `args` (without the program name). The report goes to
/// `out` (or the --output file), diagnostics and progress to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pslice
