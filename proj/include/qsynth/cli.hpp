#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsynth {

// Command-line front end. Exit codes: 0 success, 1 usage/parse error,
// 2 verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qsynth
