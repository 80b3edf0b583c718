#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace srg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInvariant = 2;

/// Runs one `srg` command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srg::cli
