#include "tensegrity/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tensegrity::run_cli(argc, argv, std::cout, std::cerr); }
