#include <iostream>
#include <string>
#include <vector>

#include "wreathlr/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return wreathlr::cli::run(args, std::cout, std::cerr);
}
