#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace b1::cli {

/// Exit codes: 0 success, 1 failed verdict or library error, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace b1::cli
