#include "tentspec/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tentspec::run(argc, argv, std::cout, std::cerr); }
