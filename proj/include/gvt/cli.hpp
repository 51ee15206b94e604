#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace gvt {

/// Runs one CLI invocation. Exit codes: 0 success, 1 usage, 2 validation
/// error, 3 window/size error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvt
