#include <iostream>

#include "ngeta/cli.hpp"

int main(int argc, char** argv) { return ngeta::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
