#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totalmatch {

/// Exit codes of the tmatch tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitExceeds = 1,   ///< the bound is exceeded (check, delta/solve with --bound)
    kExitInput = 2,     ///< unreadable input, bad flags, unmet preconditions
    kExitResource = 3,  ///< an enumeration cap was hit
    kExitMismatch = 4,  ///< verify found a disagreement
};

/// Runs one tmatch command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace totalmatch
