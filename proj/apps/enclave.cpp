#include <iostream>
#include <string>
#include <vector>

#include "enclave/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return enclave::cli::run(args, std::cin, std::cout, std::cerr);
}
