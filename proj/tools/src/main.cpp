#include <iostream>

#include "bellmatch/cli/commands.hpp"

int main(int argc, char** argv) {
  return bellmatch::cli::run_cli(argc, argv, std::cout, std::cerr);
}
