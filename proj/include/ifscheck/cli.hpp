#pragma once

// Command-line front end. Exit codes: 0 all checks passed, 1 a verification
// failed, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace ifscheck {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace ifscheck
