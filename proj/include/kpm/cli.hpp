#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpm {

/// Runs one CLI invocation. `args` excludes the program name. Exit status:
/// 0 success, 1 mathematical negative (failed predicate), 2 malformed input
/// or usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kpm
