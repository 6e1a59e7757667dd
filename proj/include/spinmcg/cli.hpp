#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinmcg::cli {

// Exit codes: 0 success / true, 1 false / mismatch, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spinmcg::cli
