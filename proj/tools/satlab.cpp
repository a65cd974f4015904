#include <iostream>
#include <string>
#include <vector>

#include "satlab_cli.hpp"

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return satlab::cli::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
