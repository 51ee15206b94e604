#include <iostream>
#include <vector>

#include "gvt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gvt::run_cli(args, std::cout, std::cerr);
}
