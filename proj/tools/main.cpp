#include <iostream>
#include <string>
#include <vector>

#include "madhava/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return madhava::cli::run(args, std::cout, std::cerr);
}
