#include "pgcodes/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return pgcodes::cli::run(argc, argv, std::cout, std::cerr);
}
