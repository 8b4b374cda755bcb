#include <iostream>
#include <string>
#include <vector>

#include "climakg/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return climakg::cli::RunCli(args, std::cout, std::cerr);
}
