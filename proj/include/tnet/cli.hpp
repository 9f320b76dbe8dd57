#pragma once

#include <iosfwd>

namespace tnet {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitPrecondition = 1, kExitViolation = 2, kExitUsage = 3 };

/// Entry point of the `tnet` tool: construct, verify, theorem, search, latin.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tnet
