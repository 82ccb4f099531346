#include <iostream>
#include <string>
#include <vector>

#include "aqsspm/cli.hpp"

int main(int argc, char** argv) {
  return aqsspm::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
