#include <iostream>
#include <string>
#include <vector>

#include "charquiv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cq::run_cli(args, std::cout, std::cerr);
}
