#include <iostream>

#include "coxbound/cli.hpp"

int main(int argc, char** argv) { return coxbound::run_cli(argc, argv, std::cout, std::cerr); }
