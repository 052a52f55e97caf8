#include <iostream>

#include "slopes/cli.hpp"

int main(int argc, char** argv) {
  return slopes::run_cli(argc, argv, std::cout, std::cerr);
}
