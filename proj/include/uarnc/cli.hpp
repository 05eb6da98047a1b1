#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uarnc {

/// Entry point of the `uarnc` tool. Returns 0 on success, 1 on a
/// validation, parse or IO error and 2 when no feasible position exists.
int run_command(int argc, char** argv);

/// Same with explicit arguments (argv[0] excluded) and streams.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uarnc
