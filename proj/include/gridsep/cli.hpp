#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridsep {

// Runs the gridsep command line on `args` (program name excluded).
// Exit codes: 0 success or pass, 1 domain failure, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gridsep
