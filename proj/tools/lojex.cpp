#include "lojex/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lojex::run(args, std::cout, std::cerr);
}
