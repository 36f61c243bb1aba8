#include <iostream>
#include <string>
#include <vector>

#include "decostab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return decostab::cli::run(args, std::cin, std::cout, std::cerr);
}
