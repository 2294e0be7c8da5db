#include <iostream>
#include <string>
#include <vector>

#include "chaincode/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chaincode::cli::run(args, std::cout, std::cerr);
}
