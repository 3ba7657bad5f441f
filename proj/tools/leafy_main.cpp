#include <iostream>
#include <string>
#include <vector>

#include "leafy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return leafy::cli::run(args, std::cout, std::cerr);
}
