#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace decomp {

// Runs one CLI invocation (args exclude the program name) and returns the
// process exit code: 0 success / property holds, 1 property violated or no
// decomposition exists, 2 usage, parse, or budget error, 3 diagnostic (an
// irreducible instance beyond the oracle's reach).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace decomp
