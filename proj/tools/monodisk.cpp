#include <iostream>
#include <string>
#include <vector>

#include "monodisk/cli.hpp"

int main(int argc, char** argv) {
  return monodisk::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
