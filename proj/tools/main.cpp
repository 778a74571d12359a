#include <iostream>

#include <polarfol/cli.hpp>

int main(int argc, char** argv) { return polarfol::run_cli(argc, argv, std::cout, std::cerr); }
