#include <iostream>
#include <string>
#include <vector>

#include "rhocalc_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rhocalc::tools::run_cli(args, std::cin, std::cout, std::cerr);
}
