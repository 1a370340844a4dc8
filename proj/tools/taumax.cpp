#include <unistd.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "taumax/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return taumax::cli::run(args, std::cout, std::cerr, isatty(fileno(stdout)) != 0);
}
