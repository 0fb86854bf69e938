#pragma once

#include <string>
#include <vector>

namespace morin::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Result {
    int exit_code = kOk;
    std::string output;
};

// args excludes the program name. When --out is given the output is also
// written to that file.
Result run(const std::vector<std::string>& args);

}  // namespace morin::cli
