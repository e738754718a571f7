#include <iostream>

#include "hcube_cli/commands.hpp"

int main(int argc, char** argv) { return hcube::cli::run_cli(argc, argv, std::cout, std::cerr); }
