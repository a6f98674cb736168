#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return operadkit::cli::run(argc, argv, std::cout, std::cerr); }
