#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicess {

// Exit codes of the command-line front end.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Runs `slicess <command> [flags]`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicess
