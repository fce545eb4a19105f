#ifndef SKETCHMATCH_CLI_HPP
#define SKETCHMATCH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sketchmatch::cli {

/// Runs one CLI invocation (arguments without the program name) against
/// the given output/error streams. Exit codes: 0 success, 1 usage error,
/// 2 I/O error, 3 format/dimension error, 4 configuration error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace sketchmatch::cli

#endif
