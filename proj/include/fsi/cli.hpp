#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fsi::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

// Runs the fsikit command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsi::cli
