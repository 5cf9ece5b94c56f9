#include <iostream>

#include "stringy/cli.hpp"

int main(int argc, char **argv) { return stringy::cli::run(argc, argv, std::cout, std::cerr); }
