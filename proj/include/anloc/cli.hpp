#pragma once

#include <string>
#include <vector>

namespace anloc::cli {

struct Result {
    int status = 0;  // 0 ok, 1 usage or domain error, 2 cross-check failure
    std::string out;
    std::string err;
};

// args excludes the program name, e.g. {"chi0", "--n", "2", "--m", "5"}.
Result run(const std::vector<std::string>& args);

}  // namespace anloc::cli
