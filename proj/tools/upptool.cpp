#include <iostream>
#include <string>
#include <vector>

#include "upp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return upp::runCli(args, std::cout, std::cerr);
}
