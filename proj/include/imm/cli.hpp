#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imm {

// Full command-line entry point. args excludes the program name. Exit
// status 0 on success, 1 on domain errors, 2 on budget exhaustion.
// Artifacts go to `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace imm
