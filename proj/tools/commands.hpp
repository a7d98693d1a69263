#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lctfb::cli {

// Exit codes: 0 = success and all requested checks within tolerance,
// 1 = a check exceeded its tolerance, 2 = invalid input or library error,
// other non-zero values come from argument parsing.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lctfb::cli
