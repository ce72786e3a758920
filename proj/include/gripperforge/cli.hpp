#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command-line surface. run() parses arguments (without the program name),
// dispatches to a subcommand, and returns the process exit code:
//   0 ok, 1 analysis negative (infeasible / overstressed / no closure),
//   2 usage or domain error, 3 I/O error.

namespace gripperforge::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gripperforge::cli
