#include <iostream>
#include <string>
#include <vector>

#include "binperm/cli.hpp"

int main(int argc, char** argv) {
  return binperm::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
