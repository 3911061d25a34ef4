#include <iostream>

#include "shell.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boolinv::shell::run(args, std::cout, std::cerr);
}
