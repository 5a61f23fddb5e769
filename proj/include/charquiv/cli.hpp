#pragma once

// Command-line front end.  The entry point is reusable from tests: it takes
// the argument list (without the program name) and the output streams, and
// returns the process exit status (0 success, 1 computation error, 2 usage
// error).

#include <iosfwd>
#include <string>
#include <vector>

namespace cq {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cq
