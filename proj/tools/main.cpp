#include <iostream>
#include <vector>

#include "schurtab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return schurtab::runCli(args, std::cout, std::cerr);
}
