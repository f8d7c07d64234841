#include <iostream>

#include "pencil/cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pencil::cli::run(args, std::cout, std::cerr);
}
