#include <iostream>
#include <string>
#include <vector>

#include "regembed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return regembed::run_cli(args, std::cout, std::cerr);
}
