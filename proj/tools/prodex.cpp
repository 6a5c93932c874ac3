#include <iostream>

#include "prodex/cli.hpp"

int main(int argc, char **argv)
{
    return prodex::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
