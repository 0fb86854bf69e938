#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    morin::cli::Result res = morin::cli::run(args);
    (res.exit_code == morin::cli::kUsage ? std::cerr : std::cout) << res.output;
    return res.exit_code;
}
