#include <iostream>

#include "tensorfractal/cli.hpp"

int main(int argc, char** argv) {
  return tensorfractal::cli::run_cli(argc, argv, std::cout, std::cerr);
}
