#include <iostream>

#include "axiswalk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return axiswalk::cli::run_command(args, std::cout, std::cerr);
}
