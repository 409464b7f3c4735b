#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace atomreach {

// Command dispatch for the atomreach tool.  `args` excludes the program name.
// Exit codes: 0 yes/success, 1 no (boolean queries / failed cross-check),
// 2 usage or validation error, 3 width budget exceeded.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atomreach
