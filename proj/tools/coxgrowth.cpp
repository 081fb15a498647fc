#include "coxgrowth/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return coxgrowth::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
