#include <iostream>

#include "secmon/cli.hpp"

int main(int argc, char** argv) {
  return secmon::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
