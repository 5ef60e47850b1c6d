#include <iostream>
#include <string>
#include <vector>

#include "lsc/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lsc::run(std::move(args), std::cout, std::cerr);
}
