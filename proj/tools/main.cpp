#include <iostream>
#include <string>
#include <vector>

#include "rns/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rns::cli::run(args, std::cout, std::cerr);
}
