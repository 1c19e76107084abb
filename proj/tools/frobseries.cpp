#include <iostream>
#include <string>
#include <vector>

#include <frobseries/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    frobseries::cli::Environment env{std::cout, std::cerr};
    return frobseries::cli::run(args, env);
}
