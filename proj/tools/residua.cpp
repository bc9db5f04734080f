#include <iostream>
#include <string>
#include <vector>

#include "residua/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return residua::run_cli(args, std::cout, std::cerr);
}
