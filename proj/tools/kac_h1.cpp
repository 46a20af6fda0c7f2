#include <iostream>

#include "kac/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return kac::cli::run(args, std::cout, std::cerr);
}
