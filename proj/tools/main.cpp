#include <string>
#include <vector>

#include "casim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return casim::run_cli(args);
}
