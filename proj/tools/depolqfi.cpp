#include <iostream>

#include "depolqfi/cli.hpp"

int main(int argc, char** argv) { return depolqfi::cli::run_cli(argc, argv, std::cout, std::cerr); }
