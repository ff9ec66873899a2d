#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domset::cli {

// Runs one command line (without the program name) against the given
// streams. Exit codes: 0 success, 1 usage or I/O error, 2 mathematical
// claim failure (a step gain below s, or a violated condition).
int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace domset::cli
