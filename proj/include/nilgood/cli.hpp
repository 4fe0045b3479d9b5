#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilgood {

// Full command dispatch. `args` excludes the program name. Returns the
// process exit code: 0 for any computed result (Unknown included), 2 for
// parse or validation errors, 3 for resource-limit violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilgood
