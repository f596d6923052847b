#include "isc/bench.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return isc::cmd_run(args, std::cout, std::cerr, std::cin);
}
