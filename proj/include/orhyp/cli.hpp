#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orhyp {

// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,           // usage, I/O or parse error
    exit_hypothesis = 2,      // hypothesis not met (e.g. non-linear input to linegraph)
    exit_violation = 3,       // a law or design check failed
};

// Runs the command line (args excludes the program name). "-" as a file
// argument reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace orhyp
