#include <iostream>
#include <string>
#include <vector>

#include "aic_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return aic::cli::run(args, std::cout, std::cerr);
}
