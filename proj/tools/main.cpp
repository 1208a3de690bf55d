#include <iostream>

#include "specbound/cli.hpp"

int main(int argc, char** argv) {
    return specbound::cli::dispatch(argc, argv, std::cin, std::cout, std::cerr);
}
