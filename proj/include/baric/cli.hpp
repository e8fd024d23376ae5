#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baric::cli {

/// Runs one invocation. `args` excludes the program name. Report lines are
/// key=value pairs. Returns 0 on success, 1 when a check fails, 2 on usage
/// or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baric::cli
