#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gibsum::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kVerificationFailure = 2;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gibsum::cli
