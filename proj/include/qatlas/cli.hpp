#pragma once

#include <string>
#include <vector>

// Command line front end. `run` executes one invocation and captures the
// emitted document, so tests and the Python bindings can drive it in-process.
//
// Exit codes: 0 all checks pass, 1 verification findings present, 2 usage or
// IO error. Output is byte-deterministic for fixed inputs.

namespace qatlas::cli {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

CommandResult run(const std::vector<std::string>& args);

}  // namespace qatlas::cli
