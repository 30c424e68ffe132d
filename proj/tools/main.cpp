#include <iostream>
#include <string>
#include <vector>

#include "cloci/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cloci::run(args, std::cout, std::cerr);
}
