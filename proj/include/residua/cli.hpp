#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace residua {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

// args[0] is the program name, as in argv.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace residua
