#include <iostream>
#include <string>
#include <vector>

#include "imm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return imm::run(args, std::cin, std::cout, std::cerr);
}
