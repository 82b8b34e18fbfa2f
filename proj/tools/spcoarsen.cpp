#include <iostream>

#include "spcoarsen/cli.hpp"

int main(int argc, char** argv) { return spcoarsen::cli::run(argc, argv, std::cout, std::cerr); }
