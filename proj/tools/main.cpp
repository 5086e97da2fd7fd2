#include <iostream>

#include "pertbern/cli.hpp"

int main(int argc, char** argv) { return pertbern::run(argc, argv, std::cout, std::cerr); }
