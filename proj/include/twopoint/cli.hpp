#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twopoint {

// Entry point of the `twopoint` tool; args exclude the program name.
// Returns 0 on success, 1 on a domain or argument-value error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twopoint
