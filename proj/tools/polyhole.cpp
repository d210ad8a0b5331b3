#include <iostream>

#include "polyhole/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyhole::run_cli(args, std::cout, std::cerr);
}
