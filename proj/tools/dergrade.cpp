#include <iostream>

#include <dergrade/cli.hpp>

int main(int argc, char** argv) {
  dergrade::cli::Streams streams{std::cin, std::cout, std::cerr};
  return dergrade::cli::main(argc, argv, streams);
}
