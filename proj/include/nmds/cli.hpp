#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmds {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,          // parse errors, bad flags
    kExitCondition = 2,      // ConditionViolated, failed --expect
    kExitSelfCheck = 3,      // SelfCheckFailed
    kExitTooLarge = 4,       // TooLarge, OrderTooLarge
    kExitOther = 5,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nmds
