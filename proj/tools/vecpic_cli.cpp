#include "vecpic/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vecpic::runCli(argc, argv, std::cout, std::cerr); }
