#include "qsl2/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qsl2::run_cli(argc, argv, std::cout, std::cerr); }
