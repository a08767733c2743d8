#include <iostream>
#include <string>
#include <vector>

#include "toda_rpp/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return toda_rpp::cli::run_cli(args, std::cout, std::cerr);
}
