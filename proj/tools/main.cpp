#include <iostream>
#include <string>
#include <vector>

#include "bqcert/commands.hpp"

int main(int argc, char** argv) {
  return bqcert::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
