#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mds::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;         // bad flags, unreadable or malformed input
constexpr int kPrecondition = 2;  // mathematical precondition failed
constexpr int kBudget = 3;        // Groebner pair budget exhausted

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mds::cli
