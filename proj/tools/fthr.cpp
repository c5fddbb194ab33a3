#include "fthr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fthr::run_cli(argc, argv, std::cout, std::cerr); }
