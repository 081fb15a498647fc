#pragma once

// Command-line front end. Exit codes: 0 success, 1 computation error or a
// failed verification, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace coxgrowth::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxgrowth::cli
