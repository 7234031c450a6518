#include <iostream>

#include "ust/cli.hpp"

int main(int argc, char** argv) { return ust::run_cli(argc, argv, std::cout, std::cerr); }
