// Command line front end: see run_cli for flags and exit codes.

#include <iostream>

#include "planecover/cli_report.hpp"

int main(int argc, char** argv) {
  return planecover::run_cli(argc, argv, std::cout, std::cerr);
}
