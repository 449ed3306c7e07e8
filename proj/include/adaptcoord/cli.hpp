#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adaptcoord {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2, // bad flags or unparsable polynomial
    kExitPrecondition = 3,
    kExitIterationCap = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace adaptcoord
