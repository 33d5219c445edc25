#include <iostream>
#include <vector>

#include "cayley/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cayley::CliResult res = cayley::run_cli(args);
    if (!res.out.empty()) std::cout << res.out;
    if (!res.err.empty()) std::cerr << res.err;
    return res.exit_code;
}
