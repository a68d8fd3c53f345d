#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pytri::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pytri::cli
