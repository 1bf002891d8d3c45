#pragma once

// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests can drive it with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab {

/// Runs one command. `args` excludes the program name. Returns the
/// process exit code: 0 on success or a passing verification, 1 when a
/// verification fails (the counterexample goes to `err`), 2 on usage or
/// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ringlab
