// subpower - finite semigroups and the subpower membership problem

#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "subpower/cli.hpp"

int main(int argc, char* argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subpower::run_cli(args, std::cout, std::cerr);
}
