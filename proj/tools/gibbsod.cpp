#include <iostream>

#include "gibbsod/cli.hpp"

int main(int argc, char** argv) {
    return gibbsod::cli::run(argc, argv, std::cout, std::cerr);
}
