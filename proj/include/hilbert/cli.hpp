#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

/// Parses `args` (without the program name), runs one command and writes its
/// JSON result to `out` (or to the --output file). Diagnostics go to `err`.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hilbert::cli
