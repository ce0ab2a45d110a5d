#include <iostream>

#include "trivext/cli.hpp"

int main(int argc, char** argv) { return trivext::cli::main(argc, argv, std::cout, std::cerr); }
