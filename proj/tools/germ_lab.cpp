#include "germlab/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return germlab::cli::run_command(argc, argv, std::cout, std::cerr);
}
