#include <iostream>
#include <string>
#include <vector>

#include "etk/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    const etk::cli::RunResult r = etk::cli::main_entry(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
