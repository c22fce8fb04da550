#include "run.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return khup::cli::main_entry(argc, argv, std::cout, std::cerr);
}
