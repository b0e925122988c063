#include <iostream>

#include "adhm/cli.hpp"

int main(int argc, char** argv) { return adhm::run_cli(argc, argv, std::cout, std::cerr); }
