#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omalg::cli {

/// Dispatches one invocation. Returns the process exit status:
/// 0 success, 1 usage error, 2 domain/validation error.
/// All error text goes to `err` as a single line starting with "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omalg::cli
