#include <iostream>

#include "lmimw/cli.hpp"

int main(int argc, char** argv) { return lmimw::run_cli(argc, argv, std::cout, std::cerr); }
