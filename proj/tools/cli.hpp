#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nuent::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kConfigError = 2, kIoError = 3 };

/// Runs the command line `args` (args[0] is the program name). Tabular and
/// record output goes to `--output` or `out`; diagnostics and the sweep
/// summary go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nuent::cli
