#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace voaf::cli {

enum ExitCode { ok = 0, failure = 1, usage = 2, inconclusive = 3 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace voaf::cli
