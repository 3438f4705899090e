#include <iostream>
#include <string>
#include <vector>

#include "twopoint/cli.hpp"

int main(int argc, char** argv)
{
    return twopoint::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
