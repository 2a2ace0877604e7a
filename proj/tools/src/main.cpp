#include <iostream>

#include "rydcav_cli/cli.hpp"

int main(int argc, char** argv) { return rydcav::cli::run(argc, argv, std::cout, std::cerr); }
