#include "wakimoto/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return wakimoto::run_cli(argc, argv, std::cout, std::cerr); }
