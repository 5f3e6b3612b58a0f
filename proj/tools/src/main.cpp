#include <iostream>

#include "skewmori/cli/commands.hpp"

int main(int argc, char** argv) { return skewmori::cli::run(argc, argv, std::cout, std::cerr); }
