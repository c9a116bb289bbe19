#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jcsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArgs = 2;
inline constexpr int kExitNumeric = 3;

/// Runs the jcsim command line. `args` excludes the program name. CSV goes to
/// `out` unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcsim::cli
