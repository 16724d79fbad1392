#include <iostream>
#include <string>
#include <vector>

#include "slin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return slin::run_cli(args, std::cout, std::cerr);
}
