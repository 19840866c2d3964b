#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toriparam::cli {

// Runs one command. args excludes the program name. Returns the process
// exit code: 0 success or a true verdict, 1 a false verdict or failed
// decomposition, 2 bad input. `tty` feeds TORIPARAM_COLOR=auto.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool tty = false);

}  // namespace toriparam::cli
