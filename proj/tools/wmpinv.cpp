#include "wmp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return wmp::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
