#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specrange::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumeric = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specrange::cli
