#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossfam::cli {

/// Runs one command line (program name excluded). Returns the process exit
/// code: 0 success or all checks passed, 1 a check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "4..14", "6" or "3,5,7".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace crossfam::cli
