#pragma once

#include <iosfwd>

namespace hyperlc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
// `suite` ran to completion but at least one criterion failed.
inline constexpr int kExitSuiteFailed = 3;

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hyperlc::cli
