#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubiform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

/// Runs the command line `args` (args[0] is the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubiform::cli
