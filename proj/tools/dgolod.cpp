#include <iostream>

#include "dgolod/cli.hpp"

int main(int argc, char** argv) { return dgolod::run(argc, argv, std::cout, std::cerr); }
