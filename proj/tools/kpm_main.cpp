#include <iostream>
#include <vector>

#include "kpm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kpm::run_cli(std::move(args), std::cout, std::cerr);
}
