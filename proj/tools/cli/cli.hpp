#pragma once

#include <string>
#include <vector>

namespace modtheta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

struct CommandResult {
  int exit_code = kExitOk;
  std::string payload;  // JSON, DOT or table text
  std::vector<std::string> diagnostics;
};

// argv excludes the program name.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace modtheta::cli
