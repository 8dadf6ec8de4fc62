#include "ddbar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ddbar::run_cli(argc, argv, std::cout, std::cerr); }
