// Command-line front end: instance generation, proposition checking,
// extension building, uniqueness decisions, and table emission. The
// entry point is stream-based so the whole interface is testable
// in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainlls {

// Runs one command (args exclude the program name). Returns the process
// exit code: 0 when everything passes, 1 when a mathematical check
// fails, 2 on input or usage errors. Reads no environment variables;
// all randomness flows from --seed.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace chainlls
