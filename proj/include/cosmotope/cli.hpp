#ifndef COSMOTOPE_CLI_HPP
#define COSMOTOPE_CLI_HPP

// Batch command surface: graph ingestion, subcommand dispatch and stable
// machine-readable reports. Exit codes: 0 pass, 1 computation failure or
// guard, 2 usage.

#include <string>
#include <vector>

#include "cosmotope/graph.hpp"

namespace cosmo {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Command {
    std::string verb;                // facets|volume|hstar|gb-verify|nonfaces|canonical-eval|cross-check
    std::string graph_spec;          // path:n, cycle:n, star:n or a file
    std::string order_spec = "auto"; // auto|path|cycle|tree:<root>|lex:<file>
    std::string output = "text";     // text|structured
    unsigned long long seed = 1;
    int count = 20;                  // points for canonical-eval
};

Command parse_args(const std::vector<std::string>& argv);

struct Report {
    bool pass = true;
    std::string text;        // human-readable rendering
    std::string structured;  // stable JSON rendering
};

Report run_command(const Command& c);
std::string emit_report(const Report& r, const std::string& format);

Graph load_graph(const std::string& spec);

std::string usage_text();

// Complete driver wrapping parse/run/emit with the exit-code contract.
int cli_main(int argc, char** argv);

}  // namespace cosmo

#endif
