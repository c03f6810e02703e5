#include "svakit/runner.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "svakit/errors.hpp"
#include "svakit/export.hpp"

namespace fs = std::filesystem;

namespace svakit {

namespace {

std::string fmt2(const std::optional<double>& v) {
    if (!v) return "-";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", *v);
    return buf;
}

std::string sanitize_filename(const std::string& id) {
    std::string out;
    out.reserve(id.size());
    for (char c : id) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
        out += ok ? c : '_';
    }
    return out;
}

fs::path ensure_output_dir(const RunConfig& config) {
    fs::path dir = config.output_dir.empty() ? "." : config.output_dir;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw DataError("cannot create output directory: " + dir.string());
    return dir;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path.string());
    return out;
}

const char* format_ext(ExportFormat f) {
    return f == ExportFormat::graphml ? ".graphml" : ".dot";
}

void export_network(const fs::path& path, ExportFormat format,
                    const CoCitationNetwork& net) {
    auto out = open_out(path);
    if (format == ExportFormat::graphml)
        write_graphml(out, net);
    else
        write_dot(out, net);
}

Corpus load_corpus(const RunConfig& config, std::ostream& out) {
    if (config.corpus_path.empty()) throw ConfigError("corpus path is required");
    ParseReport report;
    Corpus corpus = Corpus::load(config.corpus_path, &report);
    if (report.duplicate_records || report.rejected_records)
        out << "corpus: " << corpus.size() << " records ("
            << report.duplicate_records << " duplicates collapsed, "
            << report.rejected_records << " rejected)\n";
    return corpus;
}

void check_target_year(const Corpus& corpus, int target_year) {
    if (target_year < corpus.year_min() || target_year > corpus.year_max())
        throw ConfigError("target_year " + std::to_string(target_year) +
                          " outside corpus range " + std::to_string(corpus.year_min()) +
                          "-" + std::to_string(corpus.year_max()));
}

void print_summary(std::ostream& out, const std::vector<SvaScores>& scores, int top_n) {
    out << "paper_id\tcitations\tdelta_m\tcl\tc_kl\th\talpha\tbeta\tentropy\n";
    int shown = 0;
    for (const auto& s : scores) {
        if (shown++ >= top_n) break;
        out << s.paper_id << '\t' << s.citation_count << '\t' << fmt2(s.delta_m) << '\t'
            << fmt2(s.cl) << '\t' << fmt2(s.c_kl) << '\t' << fmt2(s.h) << '\t'
            << fmt2(s.alpha) << '\t' << fmt2(s.beta) << '\t' << fmt2(s.entropy) << '\n';
    }
}

std::vector<int> sweep_values(const RunConfig& config) {
    if (config.k_values.empty()) return {config.window.k};
    return config.k_values;
}

}  // namespace

ExportFormat parse_format(const std::string& name) {
    if (name == "graphml") return ExportFormat::graphml;
    if (name == "dot") return ExportFormat::dot;
    if (name == "none") return ExportFormat::none;
    throw ConfigError("format must be graphml, dot, or none");
}

void cmd_score(const RunConfig& config, std::ostream& out) {
    Corpus corpus = load_corpus(config, out);
    check_target_year(corpus, config.window.target_year);
    fs::path dir = ensure_output_dir(config);

    std::vector<int> ks = sweep_values(config);
    for (int k : ks) {
        WindowConfig wc = config.window;
        wc.k = k;
        std::string suffix = ks.size() > 1 ? "_k" + std::to_string(k) : "";

        Baseline baseline = build_baseline(corpus, wc);
        const std::vector<std::string>* targets =
            config.targets.empty() ? nullptr : &config.targets;

        std::vector<const PaperRecord*> cohort;
        if (targets) {
            for (const auto& raw : *targets) {
                std::string id = Corpus::normalize_id(raw);
                const PaperRecord* rec = corpus.find(id);
                if (!rec) throw DataError("unknown target id: " + id);
                cohort.push_back(rec);
            }
        } else {
            for (const auto& rec : corpus.records())
                if (rec.year == wc.target_year && !rec.references.empty())
                    cohort.push_back(&rec);
        }
        std::vector<NovelLinkReport> reports;
        std::vector<SvaScores> scores =
            score_papers(baseline, cohort, config.smoothing, &reports);
        assign_ranks(scores);

        // Exports are keyed by paper id before the citation-count sort.
        if (config.format != ExportFormat::none) {
            export_network(dir / ("baseline" + suffix + format_ext(config.format)),
                           config.format, baseline.network);
            for (const auto& report : reports) {
                if (report.existing_links.empty() && !report.has_novel()) continue;
                fs::path path = dir / ("novel_" + sanitize_filename(report.paper_id) +
                                       suffix + format_ext(config.format));
                auto file = open_out(path);
                if (config.format == ExportFormat::graphml)
                    write_novel_links_graphml(file, baseline.network, report);
                else
                    write_novel_links_dot(file, baseline.network, report);
            }
        }

        std::sort(scores.begin(), scores.end(), [](const SvaScores& a, const SvaScores& b) {
            if (a.citation_count != b.citation_count)
                return a.citation_count > b.citation_count;
            return a.paper_id < b.paper_id;
        });
        {
            auto table = open_out(dir / ("scores" + suffix + ".tsv"));
            write_scores_tsv(table, scores);
        }

        out << "k=" << k << " baseline " << baseline.network.provenance << ": "
            << baseline.network.node_count() << " nodes, "
            << baseline.network.edge_count() << " links, K="
            << baseline.partition.cluster_count << ", Q=" << fmt2(baseline.q) << ", "
            << scores.size() << " papers scored\n";
        print_summary(out, scores, config.top_n);
    }
}

void cmd_pseudo(const RunConfig& config, std::ostream& out) {
    if (config.seeds.size() < 2)
        throw ConfigError("pseudo needs at least two --seeds");
    Corpus corpus = load_corpus(config, out);
    PseudopaperSpec spec{config.seeds, config.strict_pseudo};
    PseudopaperPlan plan = plan_pseudopaper(corpus, spec);
    if (config.window.target_year != 0 &&
        config.window.target_year != plan.placement_year)
        throw ConfigError("target_year must equal the pseudopaper placement year " +
                          std::to_string(plan.placement_year));
    fs::path dir = ensure_output_dir(config);

    // The synthesized corpus itself, for inspection; independent of k.
    synthesize(corpus, spec).save_file((dir / "transformed.jsonl").string());

    auto table = open_out(dir / "pseudo.tsv");
    table << "k\trole\tpaper_id\tcitation_count\tdelta_m\tcl\tc_kl\th\talpha\tbeta"
             "\tentropy\trank_delta_m\trank_cl\trank_c_kl\trank_h\trank_alpha"
             "\trank_beta\trank_entropy\n";
    auto emit = [&](int k, const char* role, const std::string& id, const SvaScores* s) {
        table << k << '\t' << role << '\t' << id << '\t';
        if (!s) {
            table << "\t\t\t\t\t\t\t\t\t\t\t\t\t\t\n";
            return;
        }
        auto m = [&](const std::optional<double>& v) {
            if (!v) return std::string();
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", *v);
            return std::string(buf);
        };
        table << s->citation_count << '\t' << m(s->delta_m) << '\t' << m(s->cl) << '\t'
              << m(s->c_kl) << '\t' << m(s->h) << '\t' << m(s->alpha) << '\t'
              << m(s->beta) << '\t' << m(s->entropy) << '\t' << s->rank_delta_m << '\t'
              << s->rank_cl << '\t' << s->rank_c_kl << '\t' << s->rank_h << '\t'
              << s->rank_alpha << '\t' << s->rank_beta << '\t' << s->rank_entropy
              << '\n';
    };

    for (int k : sweep_values(config)) {
        // Each seed is scored within its own publication-year cohort on the
        // original corpus; the pseudopaper within the placement-year cohort of
        // the transformed corpus.
        for (const auto& seed : plan.ordered_seeds) {
            WindowConfig wc = config.window;
            wc.k = k;
            wc.target_year = corpus.find(seed)->year;
            std::vector<SvaScores> cohort = score_cohort(corpus, wc, config.smoothing);
            const SvaScores* found = nullptr;
            for (const auto& s : cohort)
                if (s.paper_id == seed) found = &s;
            emit(k, "seed", seed, found);
        }
        WindowConfig wc = config.window;
        wc.k = k;
        wc.target_year = plan.placement_year;
        SvaScores ps = score_pseudopaper(corpus, spec, wc, config.smoothing);
        emit(k, "pseudo", ps.paper_id, &ps);
        out << "k=" << k << " " << plan.pseudo_id << " (yr " << plan.placement_year
            << "): c_kl=" << fmt2(ps.c_kl) << " rank " << ps.rank_c_kl
            << ", h=" << fmt2(ps.h) << " rank " << ps.rank_h << ", e="
            << fmt2(ps.entropy) << " rank " << ps.rank_entropy << "\n";
    }
    out << "wrote " << (dir / "pseudo.tsv").string() << "\n";
}

void cmd_expand(const RunConfig& config, std::ostream& out) {
    if (config.seeds.empty()) throw ConfigError("expand needs --seeds");
    Corpus corpus = load_corpus(config, out);
    Corpus sub = corpus.expand_from_seeds(config.seeds, config.backward_steps,
                                          config.forward_steps);
    fs::path dir = ensure_output_dir(config);
    sub.save_file((dir / "subcorpus.jsonl").string());

    std::size_t with_refs = 0;
    std::set<std::string> cited;
    for (const auto& rec : sub.records()) {
        if (!rec.references.empty()) ++with_refs;
        cited.insert(rec.references.begin(), rec.references.end());
    }
    {
        auto profile = open_out(dir / "profile.tsv");
        profile << "records\tyear_min\tyear_max\twith_references\tunique_cited\n"
                << sub.size() << '\t' << sub.year_min() << '\t' << sub.year_max()
                << '\t' << with_refs << '\t' << cited.size() << '\n';
    }
    out << "expanded " << config.seeds.size() << " seed(s) (-" << config.backward_steps
        << "/+" << config.forward_steps << " steps) -> " << sub.size() << " records, "
        << sub.year_min() << "-" << sub.year_max() << "\n";
}

void cmd_export(const RunConfig& config, std::ostream& out) {
    if (config.format == ExportFormat::none)
        throw ConfigError("export needs --format graphml or dot");
    Corpus corpus = load_corpus(config, out);
    check_target_year(corpus, config.window.target_year);
    fs::path dir = ensure_output_dir(config);
    Baseline baseline = build_baseline(corpus, config.window);
    fs::path path = dir / ("baseline" + std::string(format_ext(config.format)));
    export_network(path, config.format, baseline.network);
    out << "baseline " << baseline.network.provenance << ": "
        << baseline.network.node_count() << " nodes, "
        << baseline.network.edge_count() << " links -> " << path.string() << "\n";
}

}  // namespace svakit
