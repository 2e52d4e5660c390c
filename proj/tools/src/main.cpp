#include <iostream>

#include "flasque/cli.hpp"

int main(int argc, char** argv) { return flasque::cli::run(argc, argv, std::cout, std::cerr); }
