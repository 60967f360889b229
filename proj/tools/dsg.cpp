#include "dsg/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string format = dsg::peek_format(args);
    dsg::CommandResult result = dsg::run_cli(args);
    std::string rendered = dsg::render_result(result, format);
    if (result.exit_code == 0) {
        std::cout << rendered;
    } else {
        std::cerr << rendered;
    }
    return result.exit_code;
}
