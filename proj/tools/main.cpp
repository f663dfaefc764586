#include <iostream>

#include "pipp/cli.hpp"

int main(int argc, char** argv) {
  return pipp::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
