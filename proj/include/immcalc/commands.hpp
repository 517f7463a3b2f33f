#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace immcalc {

// Full command-line front end.  `args` excludes the program name.
// Exit codes: 0 success, 1 parse error, 2 semantic error, 3 unsupported query.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace immcalc
