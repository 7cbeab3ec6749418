#include <iostream>

#include "detideal/cli/app.hpp"

int main(int argc, char** argv) { return detideal::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
