#include <iostream>

#include "ofa/cli.hpp"

int main(int argc, char** argv) {
  return ofa::cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
