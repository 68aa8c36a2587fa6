#include <iostream>
#include <string>
#include <vector>

#include "ubb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ubb::cli::run(args, std::cout, std::cerr);
}
