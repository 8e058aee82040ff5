#include <iostream>

#include "eqschubert/cli/commands.hpp"

int main(int argc, char** argv) { return eqschubert::cli::run(argc, argv, std::cout, std::cerr); }
