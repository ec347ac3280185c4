#include <iostream>

#include "qpsi/cli/app.hpp"

int main(int argc, char** argv) { return qpsi::cli::run(argc, argv, std::cout, std::cerr); }
