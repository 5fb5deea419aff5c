#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcdiag {

// Full command-line front end, minus the process boundary: parses `args`
// (program name excluded), writes results to `out` and diagnostics to `err`,
// returns the exit status. 0 success, 1 domain error (bad word, bad diagram
// content, oracle mismatch), 2 usage error (flags, profile syntax).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcdiag
