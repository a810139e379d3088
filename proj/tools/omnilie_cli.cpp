#include "omnilie/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return omnilie::cli::main_entry({argv + 1, argv + argc}, std::cout, std::cerr);
}
