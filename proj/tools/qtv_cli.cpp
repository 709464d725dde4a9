#include <iostream>

#include "qtv/cli.hpp"

int main(int argc, char** argv) { return qtv::run_cli(argc, argv, std::cout, std::cerr); }
