#include <iostream>
#include <string>
#include <vector>

#include "nilgood/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nilgood::run_cli(args, std::cout, std::cerr);
}
