#include <iostream>

#include "locinv/cli.hpp"

int main(int argc, char** argv) {
  return locinv::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
