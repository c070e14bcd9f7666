#include <iostream>

#include "chsh/cli.hpp"
#include "chsh/runtime.hpp"

int main(int argc, char** argv) {
  chsh::keep_large_blocks_on_heap();
  return chsh::cli::run(argc, argv, std::cout, std::cerr);
}
