#include <iostream>

#include "voaf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return voaf::cli::run(args, std::cout, std::cerr);
}
