#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chambered::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kBadInput = 2,
    kNotAffine = 3,
    kLevelZero = 4,
    kIoFailure = 5,
};

// args excludes the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace chambered::cli
