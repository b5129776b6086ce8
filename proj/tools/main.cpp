#include <iostream>
#include <string>
#include <vector>

#include "bmhull/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bmhull::run_cli(args, std::cout, std::cerr);
}
