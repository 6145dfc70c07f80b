#include <iostream>

#include "sgo/cli.hpp"

int main(int argc, char** argv) { return sgo::run_cli(argc, argv, std::cout, std::cerr); }
