#include <iostream>

#include "mpt/cli/commands.hpp"

int main(int argc, char** argv) { return mpt::cli::run(argc, argv, std::cout, std::cerr); }
