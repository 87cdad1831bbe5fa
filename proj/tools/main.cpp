#include <iostream>

#include "ltheta/cli.hpp"

int main(int argc, char** argv) {
  return ltheta::cli_run(argc, argv, std::cout, std::cerr);
}
