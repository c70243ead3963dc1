#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minortrace::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Parses and executes one command line (without the program name).
// Exit codes: 0 success, 1 invalid input, 2 oracle check failure,
// 3 resource-cap skip under --strict.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace minortrace::cli
