#include <iostream>

#include "qk/cli.hpp"
#include "qk/error.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return qk::run_cli(args, std::cout, std::cerr);
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
