#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rns::cli {

/// Runs the command line given by args (without argv[0]) writing normal
/// output to out and diagnostics to err. Exit codes: 0 success, 1 check
/// suite failure, 2 invalid input or usage, 3 state limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rns::cli
