#include <iostream>

#include "coopic/cli.hpp"

int main(int argc, char** argv) { return coopic::run_cli(argc, argv, std::cout, std::cerr); }
