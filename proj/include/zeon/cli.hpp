#pragma once

#include <iosfwd>

namespace zeon {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitBudget = 3 };

/// Runs the `zeonhg` command line. The JSON result goes to `out`; warnings and
/// diagnostics go to `err`; the hypergraph is read from `in` unless --file is
/// given.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace zeon
