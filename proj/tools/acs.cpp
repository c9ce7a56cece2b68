#include <iostream>

#include "acs/cli.hpp"

int main(int argc, char** argv) { return acs::cli::main(argc, argv, std::cout, std::cerr); }
