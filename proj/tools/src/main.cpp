#include <iostream>

#include "fourier/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fourier::cli::run(args, std::cin, std::cout, std::cerr);
}
