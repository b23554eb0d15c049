#include <iostream>
#include <string>
#include <vector>

#include "strata/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    strata::CommandResult result = strata::run(args);
    std::cout << result.output;
    return result.exit_code;
}
