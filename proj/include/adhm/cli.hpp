#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adhm {

/// Exit codes: 0 ran, 2 input error, 3 internal invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adhm
