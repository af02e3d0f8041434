#include <iostream>

#include "dgre/cli.hpp"

int main(int argc, char** argv) { return dgre::cli::main(argc, argv, std::cout, std::cerr); }
