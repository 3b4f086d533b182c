#include <string>
#include <vector>

#include "polydescent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return polydescent::run_command(args);
}
