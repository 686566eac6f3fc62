#include <iostream>
#include <string>
#include <vector>

#include "eqlat/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return eqlat::cli::run(args, std::cout, std::cerr);
}
