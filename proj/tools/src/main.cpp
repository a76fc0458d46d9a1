#include <iostream>

#include "tileforge_cli/cli.hpp"

int main(int argc, char** argv) {
  return tileforge::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
