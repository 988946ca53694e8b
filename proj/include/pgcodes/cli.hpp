#pragma once

#include <ostream>

namespace pgcodes::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInfeasible = 3;

// Entry point behind the pgcodes executable. Rendered output goes to `out`
// (or to --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pgcodes::cli
