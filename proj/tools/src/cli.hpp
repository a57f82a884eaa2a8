#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symdyn::cli {

// Exit codes: 0 success, 2 input or precondition error, 3 bounded or undecided result.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdyn::cli
