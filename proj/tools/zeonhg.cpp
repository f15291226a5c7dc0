#include <iostream>

#include "zeon/cli.hpp"

int main(int argc, char** argv) { return zeon::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
