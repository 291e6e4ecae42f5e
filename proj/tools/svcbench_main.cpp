#include <iostream>

#include "svc/bench_cli.hpp"

int main(int argc, char** argv) {
  return svc::cli::run(argc, argv, std::cout, std::cerr);
}
