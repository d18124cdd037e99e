#include <iostream>

#include "creach/cli.hpp"

int main(int argc, char** argv) { return creach::run(argc, argv, std::cout, std::cerr); }
