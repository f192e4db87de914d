#include <iostream>

#include "anloc/cli.hpp"

int main(int argc, char** argv) {
    const auto res = anloc::cli::run({argv + 1, argv + argc});
    std::cout << res.out;
    std::cerr << res.err;
    return res.status;
}
