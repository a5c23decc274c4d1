#include <cstdlib>
#include <iostream>

#include "flipgraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flipgraph::run_cli(args, std::cout, std::cerr, std::getenv("FLIPGRAPH_BUDGET"));
}
