#pragma once

#include <ostream>

namespace waring {

/// Exit codes shared by every command.
enum ExitCode : int {
    kExitSuccess = 0,    // the command's assertion holds
    kExitAssertion = 1,  // the command ran but its assertion failed
    kExitUsage = 2,      // bad flags or unreadable input
};

/// Runs one command line (argv[0] is the program name). Writes a single JSON
/// document to `out` and a human-readable summary to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace waring
