#include <iostream>

#include "snc/cli.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = snc::run_command(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.report.exit_status;
}
