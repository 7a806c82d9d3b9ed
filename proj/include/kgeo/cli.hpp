#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgeo {

// Exit status of run_cli.
enum ExitStatus : int {
    exit_ok = 0,
    exit_false = 1, // failed verification, non-isomorphic, no witness
    exit_usage = 2,
};

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics to `err`.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

} // namespace kgeo
