#include <iostream>
#include <vector>

#include "lk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lk::run_cli(args, std::cout, std::cerr);
}
