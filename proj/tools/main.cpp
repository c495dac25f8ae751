#include "waring/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return waring::run_cli(argc, argv, std::cout, std::cerr); }
