#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  mingens::cli::DispatchOptions options;
  options.tty = isatty(STDOUT_FILENO) != 0;
  return mingens::cli::dispatch(args, std::cout, std::cerr, options);
}
