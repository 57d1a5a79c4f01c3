#include <iostream>

#include "stlab/cli.hpp"

int main(int argc, char** argv) { return stlab::cli::run_cli(argc, argv, std::cout, std::cerr); }
