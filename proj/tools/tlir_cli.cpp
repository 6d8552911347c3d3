#include <iostream>
#include <string>
#include <vector>

#include "tlir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tlir::run_cli(args, std::cout, std::cerr);
}
