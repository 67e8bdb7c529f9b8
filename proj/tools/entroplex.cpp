#include <iostream>
#include <string>
#include <vector>

#include "entroplex/cli/commands.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return entroplex::cli::run_cli(args, std::cout, std::cerr);
}
