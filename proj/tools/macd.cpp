#include <iostream>

#include "macd/cli.hpp"

int main(int argc, char** argv) { return macd::run_cli(argc, argv, std::cout, std::cerr); }
