#include <iostream>
#include <string>
#include <vector>

#include "immcalc/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return immcalc::run_cli(args, std::cout, std::cerr);
}
