#include <iostream>

#include "wuchar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return wuchar::run_cli(args, std::cin, std::cout, std::cerr);
}
