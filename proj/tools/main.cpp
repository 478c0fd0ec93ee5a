#include "mocktheta/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mocktheta::run_cli(argc, argv, std::cout, std::cerr); }
