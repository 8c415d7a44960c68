#include <iostream>
#include <string>
#include <vector>

#include "gapsets/cli/app.hpp"

int main(int argc, char** argv) {
  return gapsets::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
