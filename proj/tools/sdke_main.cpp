#include <iostream>
#include <string>
#include <vector>

#include "sdke/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sdke::run_cli(args, std::cin, std::cout, std::cerr);
}
