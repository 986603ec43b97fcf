#include <iostream>
#include <string>
#include <vector>

#include "lband/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lband::run_cli(args, std::cout, std::cerr);
}
