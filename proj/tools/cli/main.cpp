#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = modtheta::cli::run(args);
  std::cout << result.payload;
  for (const auto& line : result.diagnostics) std::cerr << line << "\n";
  return result.exit_code;
}
