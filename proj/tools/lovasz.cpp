#include <iostream>

#include "lovasz/cli.hpp"

int main(int argc, char** argv)
{
    return lovasz::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
