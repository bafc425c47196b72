#include "orbit_atlas/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orbit_atlas::run_cli(argc, argv, std::cout, std::cerr); }
