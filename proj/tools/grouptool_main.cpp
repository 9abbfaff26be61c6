#include <iostream>
#include <vector>

#include "grouptool/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grouptool::cli::run(args, std::cout, std::cerr);
}
