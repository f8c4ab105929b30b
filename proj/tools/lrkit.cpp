#include <iostream>

#include "lrkit/cli.hpp"

int main(int argc, char** argv) {
    return lrkit::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
