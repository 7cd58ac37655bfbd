#include <iostream>

#include "chanda/cli.hpp"

int main(int argc, char** argv) { return chanda::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
