#pragma once

#include <string>
#include <vector>

namespace proxima::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
CommandResult run_command(const std::vector<std::string>& args);

} // namespace proxima::cli
