#include <iostream>

#include "qaw/cli/commands.hpp"

int main(int argc, char** argv) { return qaw::cli::run(argc, argv, std::cout, std::cerr); }
