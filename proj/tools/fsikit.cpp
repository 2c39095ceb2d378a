#include <iostream>
#include <string>
#include <vector>

#include "fsi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fsi::cli::run(args, std::cout, std::cerr);
}
