#include <iostream>
#include <string>
#include <vector>

#include "cusp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = cusp::cli::run_cli(args);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "cuspcheck: " << result.error << "\n";
  return result.exit_code;
}
