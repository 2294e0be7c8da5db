#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chaincode::cli {

/// Runs the command line given as argv-style tokens (without the program
/// name).  Returns the process exit code: 0 pass, 1 invariant failure,
/// 2 invalid input, 3 oracle guard exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaincode::cli
