#include <iostream>
#include <string>
#include <vector>

#include "sentcx/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sentcx::cli_main(args, std::cin, std::cout, std::cerr);
}
