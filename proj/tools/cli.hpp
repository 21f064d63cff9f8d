#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellsurf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pellsurf::cli
