#include "bnspecht/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = bnspecht::cli::run(args);
    std::cout << result.payload;
    return result.exit_code();
}
