#include <iostream>
#include <string>
#include <vector>

#include "qtak/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qtak::cli::run(args, std::cout, std::cerr);
}
