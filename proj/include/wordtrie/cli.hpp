#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wordtrie {

/// Entry point of the command-line tool, callable in-process for tests.
/// args excludes the program name. Streams are the tool's standard
/// input/output/error. Returns the process exit status:
///   find:     0 match found, 1 none, 2 error
///   replace:  0 success, 2 error
///   bench:    0 success, 2 usage error, 3 benchmark integrity failure
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace wordtrie
