#include "cubecolor/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return cubecolor::run_cli(argc, argv, std::cout, std::cerr);
}
