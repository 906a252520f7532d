#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = polarauto::cli::dispatch(args);
  if (!outcome.diagnostics.empty())
    (outcome.exit_code == 0 ? std::cout : std::cerr) << outcome.diagnostics;
  if (!outcome.payload.empty()) std::cout << outcome.payload << '\n';
  return outcome.exit_code;
}
