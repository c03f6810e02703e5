#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "svakit/metrics.hpp"
#include "svakit/pseudopaper.hpp"

namespace svakit {

enum class ExportFormat { graphml, dot, none };
ExportFormat parse_format(const std::string& name);  // throws ConfigError

// One run's worth of parameters, shared by all subcommands.
struct RunConfig {
    std::string corpus_path;
    WindowConfig window;
    SmoothingConfig smoothing;
    std::vector<int> k_values;         // sweep over scaling factors; empty = {window.k}
    std::vector<std::string> seeds;    // expand seeds / pseudopaper seeds
    std::vector<std::string> targets;  // optional id filter for scoring
    int backward_steps = 1;
    int forward_steps = 1;
    std::string output_dir = ".";
    ExportFormat format = ExportFormat::graphml;
    bool strict_pseudo = false;
    int top_n = 10;
};

// Subcommand drivers. Artifacts go to config.output_dir, a short summary to
// `out`. Errors surface as ConfigError / DataError; main maps them to exit
// codes 2 / 1.
void cmd_score(const RunConfig& config, std::ostream& out);
void cmd_pseudo(const RunConfig& config, std::ostream& out);
void cmd_expand(const RunConfig& config, std::ostream& out);
void cmd_export(const RunConfig& config, std::ostream& out);

}  // namespace svakit
