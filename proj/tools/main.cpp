#include <iostream>
#include <string>
#include <vector>

#include "secmimo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return secmimo::dispatch(args, std::cout, std::cerr);
}
