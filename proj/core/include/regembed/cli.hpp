#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regembed {

// Runs one command (args excludes the program name) and returns the process
// exit code: 0 success (for verify, groups equal), 1 verification failure,
// 2 parse or validation error, 3 size cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regembed
