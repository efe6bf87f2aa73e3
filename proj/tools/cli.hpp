#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revgenus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitInvariant = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revgenus::cli
