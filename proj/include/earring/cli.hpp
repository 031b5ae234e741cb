// Batch front end. One invocation runs one subcommand over expressions
// or named family elements and writes its result to the given streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace earring::cli {

// Runs the command line in `args` (program name excluded). Normal
// output goes to `out`, diagnostics to `err`. Returns the process exit
// status: 0 on success, 1 on domain errors (failed preconditions,
// unreadable input, out-of-range values), 2 on usage or expression
// syntax errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace earring::cli
