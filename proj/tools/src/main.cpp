#include <iostream>
#include <string>
#include <vector>

#include "domset/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return domset::cli::dispatch(std::move(args), std::cout, std::cerr);
}
