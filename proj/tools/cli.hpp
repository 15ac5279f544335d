#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw::cli {

/// Runs one command (args exclude the program name). Returns the exit
/// status: 0 success, 1 failed verification, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbw::cli
