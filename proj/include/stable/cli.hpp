#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stable::cli {

// Exit codes: 0 ok, 1 selftest failure, 2 validation error, 3 numerical
// failure, 64 usage error. args excludes the program name. Output goes to
// out, diagnostics to err; the process front end passes std::cout/std::cerr.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace stable::cli
