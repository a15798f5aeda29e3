#include <iostream>
#include <string>
#include <vector>

#include "vecdom/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vecdom::RunCli(args, std::cout, std::cerr);
}
