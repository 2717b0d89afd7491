#include <iostream>

#include "galmag/cli.hpp"

int main(int argc, char** argv) {
  return galmag::cli::run(argc, argv, std::cout, std::cerr);
}
