#include <iostream>

#include "subrank/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subrank::cli::run(args, std::cout, std::cerr);
}
