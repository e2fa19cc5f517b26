#include <iostream>
#include <string>
#include <vector>

#include "ompstat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ompstat::cli::run(args, std::cout, std::cerr);
}
