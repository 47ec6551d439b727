#include <iostream>
#include <string>
#include <vector>

#include "wavelab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return wavelab::cli_main(args, std::cout, std::cerr);
}
