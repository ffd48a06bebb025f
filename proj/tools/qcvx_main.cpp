#include <iostream>

#include "qcvx/cli.hpp"

int main(int argc, char** argv) { return qcvx::cli::run(argc, argv, std::cout, std::cerr); }
