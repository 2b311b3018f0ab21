#include <iostream>

#include "hgar/cli.hpp"

int main(int argc, char** argv)
{
    return hgar::cli::run(argc, argv, std::cout, std::cerr);
}
