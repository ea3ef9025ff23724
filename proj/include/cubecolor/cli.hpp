#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubecolor {

/// Exit codes: 0 success / valid / conflict-free, 1 ran but the result is
/// invalid or still has conflicts, 2 usage, parse or other operational error.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

/// Same, with args excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cubecolor
