#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uncsmear::cli {

/// Exit status for bad input: unknown ids, invalid parameters, unreadable files.
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name). Written files
/// are listed on `out`, diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uncsmear::cli
