#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rademacher::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation; args excludes the program name. Results go to `out`
// (JSON unless --plain), errors to `err` as {"error": {"code", "message"}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rademacher::cli
