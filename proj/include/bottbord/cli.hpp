#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bottbord {

// Exit codes: 0 success/pass, 1 verification counterexample, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bottbord
