#include <iostream>

#include "pslice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pslice::run_cli(args, std::cout, std::cerr);
}
