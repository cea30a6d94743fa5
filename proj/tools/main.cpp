#include <iostream>

#include "stacktree/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return stacktree::cli_main(argc, argv, std::cin, std::cout, std::cerr);
}
