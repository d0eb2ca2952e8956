#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace yam {

// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // an axiom or identity is violated
inline constexpr int kExitError = 2;  // malformed input or usage

// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yam
