#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfano::cli {

/// Executes one CLI invocation (args exclude the program name) and streams
/// records to out. Exit codes: 0 success, 1 reproduce mismatch, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfano::cli
