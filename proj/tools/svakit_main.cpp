// Command-line driver: score | pseudo | expand | export.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "svakit/errors.hpp"
#include "svakit/runner.hpp"

namespace {

constexpr const char* kTableDoc =
    "scores.tsv columns: paper_id, citation_count, delta_m, cl, c_kl, h, alpha, "
    "beta, entropy, rank_delta_m, rank_cl, rank_c_kl, rank_h, rank_alpha, "
    "rank_beta, rank_entropy, novel_within, novel_between, existing, dropped_pairs. "
    "Missing metrics are empty fields. Exit codes: 0 ok, 1 data error, 2 config error.";

struct CliOptions {
    svakit::RunConfig run;
    std::string format = "graphml";
    std::uint64_t seed = 0;
    bool seed_set = false;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--corpus", opt.run.corpus_path, "Corpus file (JSON lines)")
        ->required();
    cmd->add_option("--out", opt.run.output_dir, "Output directory")
        ->envname("SVAKIT_OUT_DIR");
    cmd->add_option("--format", opt.format, "Network export format: graphml|dot|none");
    cmd->set_config("--config", "", "Config file with long option defaults");
}

void add_window(CLI::App* cmd, CliOptions& opt) {
    auto& w = opt.run.window;
    cmd->add_option("--target-year", w.target_year, "Target publication year");
    cmd->add_option("--window", w.window_years, "Sliding window years for the baseline")
        ->capture_default_str();
    cmd->add_option("--frame", w.frame_years, "Publication time frame years")
        ->capture_default_str();
    cmd->add_option("--k", opt.run.k_values, "g-index scaling factor; comma list sweeps")
        ->delimiter(',');
    cmd->add_option("--lrf", w.lrf, "Link retaining factor")->capture_default_str();
    cmd->add_option("--max-links", w.max_links, "Strongest links kept per node")
        ->capture_default_str();
    cmd->add_option("--lby", w.lby, "Look back years; -1 unlimited")
        ->capture_default_str();
    cmd->add_option("--e", w.min_citations, "In-window citation floor")
        ->capture_default_str();
    cmd->add_option("--epsilon", opt.run.smoothing.epsilon, "KL smoothing constant")
        ->capture_default_str();
    cmd->add_option_function<std::uint64_t>(
           "--seed",
           [&opt](const std::uint64_t& v) {
               opt.seed = v;
               opt.seed_set = true;
           },
           "Seed for randomized Louvain sweep order (default: fixed order)");
    cmd->add_option("--top-n", opt.run.top_n, "Summary rows printed")
        ->capture_default_str();
}

void finish(CliOptions& opt) {
    opt.run.format = svakit::parse_format(opt.format);
    if (opt.seed_set) opt.run.window.seed = opt.seed;
    if (!opt.run.k_values.empty()) opt.run.window.k = opt.run.k_values.front();
}

}  // namespace

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"svakit: co-citation networks and structural variation scoring"};
    app.footer(kTableDoc);
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* score = app.add_subcommand(
        "score", "Score the target-year citing papers against the baseline network");
    add_common(score, opt);
    add_window(score, opt);
    score->add_option("--targets", opt.run.targets, "Only score these paper ids")
        ->delimiter(',');
    score->get_option("--target-year")->required();

    CLI::App* pseudo = app.add_subcommand(
        "pseudo", "Consolidate seed papers into a pseudopaper and score it");
    add_common(pseudo, opt);
    add_window(pseudo, opt);
    pseudo->add_option("--seeds", opt.run.seeds, "Seed paper ids (>= 2)")
        ->delimiter(',')
        ->required();
    pseudo->add_flag("--strict", opt.run.strict_pseudo,
                     "Rewrite citations only in the seed years");

    CLI::App* expand = app.add_subcommand(
        "expand", "Write the sub-corpus reachable from seed papers");
    add_common(expand, opt);
    expand->add_option("--seeds", opt.run.seeds, "Seed paper ids")
        ->delimiter(',')
        ->required();
    expand->add_option("--backward", opt.run.backward_steps, "Backward hops")
        ->capture_default_str();
    expand->add_option("--forward", opt.run.forward_steps, "Forward hops")
        ->capture_default_str();

    CLI::App* exportc = app.add_subcommand(
        "export", "Build and export the baseline network for a target year");
    add_common(exportc, opt);
    add_window(exportc, opt);
    exportc->get_option("--target-year")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        finish(opt);
        if (*score)
            svakit::cmd_score(opt.run, std::cout);
        else if (*pseudo)
            svakit::cmd_pseudo(opt.run, std::cout);
        else if (*expand)
            svakit::cmd_expand(opt.run, std::cout);
        else if (*exportc)
            svakit::cmd_export(opt.run, std::cout);
    } catch (const svakit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const svakit::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
