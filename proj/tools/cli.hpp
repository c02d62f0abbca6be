#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relrep::cli {

/// Entry point shared by the binary and the tests.  argv excludes the
/// program name.  Returns the process exit code: 0 on success, 1 on
/// malformed input, 2 on numerical failure (off-shell momenta, residuals
/// above threshold, matrices outside the required group).
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace relrep::cli
