#include <iostream>
#include <string>
#include <vector>

#include "cubiform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cubiform::cli::run(args, std::cout, std::cerr);
}
