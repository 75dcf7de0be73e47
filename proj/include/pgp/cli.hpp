#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgp::cli {

// Runs the command line tool. Exit codes: 0 for success (for `check`, a
// satisfied stipulation), 1 for a violated stipulation, 2 for any error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace pgp::cli
