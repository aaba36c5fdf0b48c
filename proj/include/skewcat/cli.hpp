#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace skew {

// Runs one command line (without the program name). Returns the exit status:
// 0 on success, 1 when `equal` answers no, 2 on parse or type errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in = std::cin);

}  // namespace skew
