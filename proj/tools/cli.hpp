#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svtab::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 identity or oracle mismatch, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svtab::cli
