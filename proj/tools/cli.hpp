#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scc::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs `scc <subcommand> ...`; `args` excludes the program name.
/// Artifacts go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scc::cli
