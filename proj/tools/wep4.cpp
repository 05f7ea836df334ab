#include "wep4/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return wep4::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
