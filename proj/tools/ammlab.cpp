#include <iostream>
#include <string>
#include <vector>

#include "ammlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ammlab::run_cli(args, std::cout, std::cerr);
}
