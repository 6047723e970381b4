#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shirshov::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kInternal = 1,      // an invariant check failed; indicates a bug
    kBadInput = 2,
    kNotWitnessed = 3,
    kStepBudget = 4,
};

/// Runs one invocation. `args` excludes the program name, e.g.
/// {"decompose", "--json", "{...}"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shirshov::cli
