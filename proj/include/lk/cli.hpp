#ifndef LK_CLI_HPP
#define LK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lk {

/// Runtime options shared by the subcommands; tolerances only matter to the
/// numeric string module, seeds only to randomized property drivers.
struct RunConfig {
    unsigned long seed = 0;
    double tolerance = 1e-2;
    int order = 12;
    std::string format = "text";  // or "json"
};

/// The command-line entry point (also used directly by the acceptance
/// suite).  Returns 0 for success/true verdicts, 1 for false verdicts
/// (axioms fail, not Kan, not discrete, ...), 2 for malformed input or
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lk

#endif
