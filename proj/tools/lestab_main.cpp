#include "lestab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return lestab::run_cli(argc, argv, std::cout, std::cerr);
}
