#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axiswalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one subcommand. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace axiswalk::cli
