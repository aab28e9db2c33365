#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torelli::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 2, kEnvironment = 3 };

/// Name of the cached built-in representation document, written to the
/// working directory on first use.
inline constexpr const char* kRepCacheFile = "torelli_rep.json";

/// Runs the command line `args` (without the program name) and returns the
/// process exit code.  Documents and summaries go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torelli::cli
