#include <iostream>
#include <string>
#include <vector>

#include "resolve/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return resolve::run(args, std::cout, std::cerr);
}
