#include <iostream>

#include "discdet/cli.hpp"

int main(int argc, char** argv) { return discdet::run_cli(argc, argv, std::cout, std::cerr); }
