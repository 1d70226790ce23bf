#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dislab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;

/// Entry point of the `dislab` tool. Writes CSV to `out` (unless --output or
/// [output].path redirects it to a file) and diagnostics to `err`. Returns
/// the process exit code: 0 success, 2 configuration or validation error,
/// 3 mathematical infeasibility.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "0.1,0.3,0.5". Throws dislab::ConfigError on empty or malformed
/// input.
std::vector<double> parse_grid(const std::string& text);

}  // namespace dislab::cli
