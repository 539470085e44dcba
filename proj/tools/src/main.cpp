#include <iostream>
#include <string>
#include <vector>

#include "theta_lab_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return theta_lab::cli::run(args, std::cout, std::cerr);
}
