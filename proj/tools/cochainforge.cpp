#include <iostream>

#include "cf/cli/cli.hpp"

int main(int argc, char** argv) { return cf::cli::run(argc, argv, std::cout, std::cerr); }
