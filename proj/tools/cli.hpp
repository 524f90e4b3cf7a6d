#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdq::cli {

enum ExitCode : int {
    kOk = 0,
    kArgumentError = 2,
    kInfeasible = 3,
    kResourceLimit = 4,
};

/// Runs one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdq::cli
