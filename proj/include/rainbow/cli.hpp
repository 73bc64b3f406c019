#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

// Exit status contract.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;       // verification or construction failure
inline constexpr int kInputError = 2;    // unparsable input, out-of-scope graph
inline constexpr int kBudgetExhausted = 3;

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli
