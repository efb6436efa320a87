#include "mathbench/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mathbench::run_cli(argc, argv, std::cout, std::cerr); }
