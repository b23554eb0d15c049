#pragma once

#include <string>
#include <vector>

namespace strata {

/// Exit code 0 on success, 1 on domain errors, 2 on usage errors. The
/// payload carries everything the command printed; identical argv gives
/// byte-identical payloads.
struct CommandResult {
    int exit_code = 0;
    std::string output;
};

CommandResult run(const std::vector<std::string>& argv);

}  // namespace strata
