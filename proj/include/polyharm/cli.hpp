#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace phm::cli {

/// Exit codes: 0 success, 1 mathematically meaningful negative, 2 usage/parse/I-O error.
enum ExitStatus : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// as name=value lines, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phm::cli
