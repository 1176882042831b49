#include <iostream>

#include "modcensus/cli.hpp"

int main(int argc, char** argv) {
    return modcensus::cli::run(argc, argv, std::cout, std::cerr);
}
