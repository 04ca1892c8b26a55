#include "mcdm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mcdm::runCli(argc, argv, std::cout, std::cerr);
}
