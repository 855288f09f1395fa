#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redinv::cli {

enum ExitCode { kOk = 0, kBadInput = 1, kVerificationFailed = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redinv::cli
