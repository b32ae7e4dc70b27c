#include <iostream>

#include "cli.hpp"

int main(int argc, char **argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return stirlingkit::cli::run(args, std::cin, std::cout, std::cerr);
}
