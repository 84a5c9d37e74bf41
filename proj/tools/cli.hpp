#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qzs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Full command line, args[0] being the program name. Reports go to out,
/// warnings and diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qzs::cli
