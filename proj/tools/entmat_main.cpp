#include <iostream>
#include <string>
#include <vector>

#include "entmat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return entmat::run_cli(std::move(args), std::cout, std::cerr);
}
