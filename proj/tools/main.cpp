#include <iostream>

#include "skewpbw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewpbw::runCli(args, std::cout, std::cerr);
}
