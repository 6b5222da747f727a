#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biplane::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;    // e.g. NOT-BIPLANE
inline constexpr int kInputError = 2;  // malformed files, bad flags

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biplane::cli
