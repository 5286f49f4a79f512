#include <iostream>
#include <vector>

#include "gerst/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gerst::run_cli(args, std::cout, std::cerr);
}
