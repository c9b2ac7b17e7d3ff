#include <iostream>

#include "zrepel/cli.hpp"

int main(int argc, char** argv) {
  return zrepel::cli::run(argc, argv, std::cout, std::cerr);
}
