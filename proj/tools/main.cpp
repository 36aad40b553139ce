#include <iostream>

#include "cmm/cli.hpp"

int main(int argc, char** argv) { return cmm::run_cli(argc, argv, std::cout, std::cerr); }
