#include <iostream>
#include <string>
#include <vector>

#include "geodetic/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return geodetic::cli::run(args, std::cout, std::cerr);
}
