#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ubb::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kResource = 3 };

/// Runs one command line (args[0] is the program name). JSON/CSV bodies go
/// to `out` or to --out files; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ubb::cli
