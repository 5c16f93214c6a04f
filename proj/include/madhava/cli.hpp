#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace madhava::cli {

/// Exit codes shared by the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,   // malformed arguments / unparsable numbers
    exit_domain = 3,  // precondition violated or a verification failed
};

/// Runs the command line given argv-style arguments (program name excluded),
/// writing results to `out` and diagnostics to `err`.  Never throws; all
/// errors are mapped to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace madhava::cli
