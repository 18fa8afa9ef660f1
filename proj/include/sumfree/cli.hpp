#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumfree {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Environment variable holding the largest horizon the tool will sieve to.
inline constexpr const char* kHorizonCapEnv = "SUMFREE_HORIZON_CAP";

/// Entry point of the `sumfree` tool; args excludes the program name.
/// Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumfree
