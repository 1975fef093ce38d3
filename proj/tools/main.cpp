#include <iostream>
#include <string>
#include <vector>

#include "nsnp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nsnp::cli::run(std::move(args), std::cout, std::cerr);
}
