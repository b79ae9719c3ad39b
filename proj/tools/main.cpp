#include <iostream>

#include "galoisdraw/cli.hpp"

int main(int argc, char** argv) {
  return galoisdraw::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
