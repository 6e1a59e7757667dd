#include <iostream>

#include "spinmcg/cli.hpp"

int main(int argc, char** argv) { return spinmcg::cli::run(argc, argv, std::cout, std::cerr); }
