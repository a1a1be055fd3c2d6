#include <iostream>

#include "ratdecomp/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    ratdecomp::CliResult r = ratdecomp::run_cli(args, std::cin);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
