#include <iostream>

#include "gcdeg/cli.hpp"

int main(int argc, char** argv) {
    return gcdeg::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
