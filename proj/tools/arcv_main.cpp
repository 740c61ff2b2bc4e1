#include <iostream>

#include "arcv/cli.hpp"

int main(int argc, char** argv) { return arcv::cli::run(argc, argv, std::cout, std::cerr); }
