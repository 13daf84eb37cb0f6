#include "gdom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gdom::cli::run(argc, argv, std::cout, std::cerr); }
