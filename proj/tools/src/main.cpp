#include <iostream>
#include <string>
#include <vector>

#include "polyfree_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polyfree::cli::run(args, std::cout, std::cerr);
}
