#pragma once

#include <string>
#include <vector>

namespace cayley {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// exit codes: 0 success, 1 domain error (bad ring spec), 2 verification or
// theorem mismatch, 64 usage error
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace cayley
