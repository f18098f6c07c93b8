#include <iostream>

#include "vknot/cli.hpp"

int main(int argc, char** argv)
{
    return vknot::run_cli(argc, argv, std::cout, std::cerr);
}
