#include <iostream>

#include "whittaker_cli/commands.hpp"

int main(int argc, char** argv) { return whittaker::cli::run_cli(argc, argv, std::cout, std::cerr); }
