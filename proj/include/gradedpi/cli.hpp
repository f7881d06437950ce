#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gradedpi {

// Exit codes of run().
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedpi
