#include <iostream>
#include <string>
#include <vector>

#include <etacong/cli.hpp>

int main(int argc, char **argv)
{
    return etacong::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
