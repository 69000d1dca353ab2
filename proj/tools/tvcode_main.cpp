#include <iostream>

#include "tvcode/cli.hpp"

int main(int argc, char** argv) {
    return tvcode::cli::run(argc, argv, std::cout, std::cerr);
}
