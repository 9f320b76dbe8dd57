#include <iostream>

#include "tnet/cli.hpp"

int main(int argc, char** argv) { return tnet::run_cli(argc, argv, std::cout, std::cerr); }
