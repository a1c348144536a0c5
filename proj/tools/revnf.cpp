#include <iostream>
#include <string>
#include <vector>

#include "revnf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return revnf::run_cli(args, std::cout, std::cerr);
}
