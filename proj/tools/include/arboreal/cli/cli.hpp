#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arboreal::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUnknown = 2,
  kUsage = 64,
};

// args excludes the program name. Structured output goes to out, messages
// and usage errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arboreal::cli
