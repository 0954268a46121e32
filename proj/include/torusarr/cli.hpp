#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torusarr::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kNotFeasible = 2;
inline constexpr int kResourceLimit = 3;
inline constexpr int kTheoremViolation = 4;

/// Runs one invocation. args[0] is the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torusarr::cli
