#include <iostream>
#include <vector>

#include "bottbord/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return bottbord::run(args, std::cout, std::cerr);
}
