#include <iostream>
#include <string>
#include <vector>

#include "lcheck_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcheck::cli::run(args, std::cout, std::cerr);
}
