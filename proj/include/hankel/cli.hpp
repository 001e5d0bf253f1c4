#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

// Full CLI entry point; exit status 0 = success, 1 = computation failure,
// 2 = usage error. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

// Operation -> subcommand map (coverage audit hook for the test suite).
std::vector<std::pair<std::string, std::string>> cli_operation_coverage();

}  // namespace hankel
