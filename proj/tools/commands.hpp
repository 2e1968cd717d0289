#ifndef MPP_TOOLS_COMMANDS_HPP
#define MPP_TOOLS_COMMANDS_HPP

#include <string>
#include <vector>

#include "mpp/errors.hpp"
#include "mpp/io.hpp"

namespace mpp::cli {

using Json = io::Json;

/** Flags shared by the subcommands; each subcommand reads only the ones it registers. */
struct Options {
    std::string command;
    std::string poset_file;
    std::string t;          // a parameter file or "generic"
    std::string partition;  // a {"C", "O"} file
    std::string to;         // degeneration target, a parameter file or "generic"
    std::string a, b;       // hibi-li partitions
    std::string method = "dd";
    std::string check;
    std::string off;
    int dilations = -1;
    int samples = 3;
    bool irredundant = false;
    bool projected = false;
    bool ideal_chains = false;
    bool pentagon = false;
};

/** An invalid poset, with every violated invariant. */
class ValidationFailed : public InputError
{
    public:
        explicit ValidationFailed(std::vector<std::string> violations)
            : InputError("invalid marked poset"), violations(std::move(violations)) {}
        std::vector<std::string> violations;
};

struct Outcome {
    Json report;
    std::string summary;
    int exit_code = 0;
};

Outcome run(const Options& options);

}  // namespace mpp::cli

#endif
