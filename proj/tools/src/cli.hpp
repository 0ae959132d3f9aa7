#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chibound::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int
{
    exit_ok = 0,
    /// A structure violation, a refuted certificate, a failed --verify, a
    /// non-member in `check`, or an exhausted `gen`.
    exit_failed = 1,
    /// Unreadable input or bad usage, including an oracle size refusal.
    exit_usage = 2,
};

/// Runs one command line; `args` excludes the program name. The JSON report
/// goes to `out`, diagnostics to `err`.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
