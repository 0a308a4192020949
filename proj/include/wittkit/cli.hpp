#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wittkit {

// Runs one command line (arguments without the program name). JSON goes to
// `out`, diagnostics to `err`. Returns 0 on success, 1 on a mathematical
// failure and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittkit
