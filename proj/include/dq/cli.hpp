#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dq {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dq
