#ifndef RATDECOMP_CLI_HPP
#define RATDECOMP_CLI_HPP

#include <istream>
#include <string>
#include <vector>

namespace ratdecomp {

struct CliResult {
    // 0 success, 1 usage or input error, 2 mathematical failure.
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Runs one command line (without the program name). An argument "-" in place
// of an expression reads the next nonempty line from `in`.
CliResult run_cli(const std::vector<std::string>& args, std::istream& in);

} // namespace ratdecomp

#endif
