#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace branchcheck {

// Runs the branchcheck command line on args (excluding the program name).
// Exit status: 0 for a definite verdict, 1 for parse/internal errors, 2 when
// the criterion does not apply to the input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchcheck
