#include <iostream>

#include "ecpkit/cli.hpp"

int main(int argc, char** argv) {
    return ecpkit::cli_main(argc, argv, std::cout, std::cerr);
}
