#include <iostream>

#include "hyperdeg/cli.hpp"

int main(int argc, char** argv)
{
    return hyperdeg::run_cli(argc, argv, std::cout, std::cerr);
}
