#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavelab {

/// Command-line entry point. `args` excludes the program name.
/// Exit codes: 0 success, 1 usage/config/domain error, 2 numerical abort.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavelab
