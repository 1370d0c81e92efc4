#include <iostream>
#include <string>
#include <vector>

#include "rrw/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rrw::run_cli(args, std::cout, std::cerr);
}
