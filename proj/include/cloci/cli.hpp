#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cloci {

/// Dispatches one command line (without the program name). Reports go to
/// `out`, diagnostics to `err`. Exit codes: 0 success, 1 domain error
/// (invalid graph, not admissible, no m-divisor, ...), 2 usage or parse
/// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cloci
