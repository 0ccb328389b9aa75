#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return repetend::cli::run(argc, argv, std::cout, std::cerr);
}
