#include <iostream>
#include <vector>

#include "folcoh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return folcoh::run_cli(args, std::cout, std::cerr);
}
