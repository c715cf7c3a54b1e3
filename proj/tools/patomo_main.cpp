#include <iostream>

#include "patomo/cli.hpp"

int main(int argc, char** argv) {
  return patomo::cli::run(argc, argv, std::cout, std::cerr);
}
