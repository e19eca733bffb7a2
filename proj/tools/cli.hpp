#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphdesign::cli {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitError = 1;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphdesign::cli
