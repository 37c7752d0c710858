#include <iostream>
#include <string>
#include <vector>

#include "qsynth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsynth::run_cli(std::move(args), std::cout, std::cerr);
}
