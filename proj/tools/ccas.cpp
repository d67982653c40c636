#include <iostream>

#include "ccas/cli.hpp"

int main(int argc, char** argv) {
  return ccas::cli::run_cli(argc, argv, std::cout, std::cerr);
}
