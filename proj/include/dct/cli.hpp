#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dct {

/// Runs one CLI invocation. Exit codes: 0 success, 1 validation or check
/// failure, 2 usage error, 3 I/O error. Reentrant; all state is local.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dct
