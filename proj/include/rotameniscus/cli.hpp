#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotameniscus {

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 numerical failure, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotameniscus
