#include <iostream>
#include <string>
#include <vector>

#include "sqtile/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sqtile::run_cli(args, std::cin, std::cout, std::cerr);
}
