#include <iostream>

#include "vbf/cli.hpp"

int main(int argc, char** argv) {
    return vbf::run_cli(argc, argv, std::cout, std::cerr);
}
