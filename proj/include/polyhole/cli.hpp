#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polyhole {

// exit codes: 0 ok, 1 verification failure, 2 usage error, 3 internal invariant violation
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyhole
