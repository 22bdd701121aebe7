#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homcount
{
    /// Runs the command line (args excludes the program name); returns the process exit status.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
