#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adnil::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 ok, 1 a check failed, 2 bad usage or input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adnil::cli
