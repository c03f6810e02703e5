#include "svakit/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "svakit/errors.hpp"

namespace svakit {

namespace {

// Index-parallel loop with deterministic output slots; rethrows the first
// worker exception.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::min<std::size_t>(n, hw ? hw : 1);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        threads.emplace_back([&] {
            std::size_t i;
            while ((i = next.fetch_add(1)) < n && !failed.load()) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true);
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

double delta_m(const CoCitationNetwork& gs, const CoCitationNetwork& ga,
               const std::vector<int>& assignment) {
    double qs = modularity(gs, assignment);
    if (qs == 0.0) throw DataError("baseline modularity zero");
    double qa = modularity(ga, assignment);
    return 100.0 * (qs - qa) / qs;
}

double linkage(const CoCitationNetwork& network, const std::vector<int>& assignment,
               int cluster_count, LinkWeighting weighting) {
    if (assignment.size() != network.nodes.size())
        throw DataError("assignment does not cover the network nodes");
    if (cluster_count < 1) throw DataError("cluster count must be >= 1");
    double sum = 0;
    for (const auto& [pair, w] : network.edges) {
        if (assignment[pair.first] == assignment[pair.second]) continue;
        double eps = weighting == LinkWeighting::unit ? 1.0 : static_cast<double>(w);
        sum += 2.0 * eps;  // both ordered pairs of the bridge
    }
    return sum / cluster_count;
}

double cluster_linkage(const CoCitationNetwork& gs, const CoCitationNetwork& ga,
                       const std::vector<int>& assignment, int cluster_count,
                       int boundary_refs, int total_refs, LinkWeighting weighting) {
    if (total_refs < 1) throw DataError("paper has no references");
    double ls = linkage(gs, assignment, cluster_count, weighting);
    if (ls == 0.0) throw DataError("baseline linkage zero");
    double la = linkage(ga, assignment, cluster_count, weighting);
    return 100.0 * (la - ls) / ls *
           (static_cast<double>(boundary_refs) / static_cast<double>(total_refs));
}

namespace {

double smoothed_kl(const std::vector<double>& bs, const std::vector<double>& ba,
                   double epsilon) {
    if (bs.size() != ba.size())
        throw DataError("networks do not share a node set");
    if (epsilon <= 0) throw ConfigError("epsilon must be > 0");
    double sp = 0, sq = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        sp += bs[i] + epsilon;
        sq += ba[i] + epsilon;
    }
    double kl = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        double p = (bs[i] + epsilon) / sp;
        double q = (ba[i] + epsilon) / sq;
        kl += p * std::log(p / q);
    }
    return std::max(kl, 0.0);
}

}  // namespace

double centrality_divergence(const CoCitationNetwork& gs, const CoCitationNetwork& ga,
                             const SmoothingConfig& smoothing) {
    if (gs.nodes != ga.nodes) throw DataError("networks do not share a node set");
    return smoothed_kl(betweenness(gs), betweenness(ga), smoothing.epsilon);
}

double centrality_divergence(const std::vector<double>& baseline_betweenness,
                             const CoCitationNetwork& ga, const SmoothingConfig& smoothing) {
    return smoothed_kl(baseline_betweenness, betweenness(ga), smoothing.epsilon);
}

std::pair<double, double> alpha_beta(const NovelLinkReport& report,
                                     const CoCitationNetwork& ga,
                                     const std::vector<int>& assignment) {
    if (assignment.size() != ga.nodes.size())
        throw DataError("assignment does not cover the network nodes");
    long long within = 0, between = 0;
    for (const auto& [pair, w] : ga.edges)
        (assignment[pair.first] == assignment[pair.second] ? within : between) += 1;
    double alpha = within == 0 ? 0.0
                               : static_cast<double>(report.novel_within.size()) / within;
    double beta = between == 0 ? 0.0
                               : static_cast<double>(report.novel_between.size()) / between;
    return {alpha, beta};
}

double entropy(const PaperRecord& paper, const std::vector<int>& assignment,
               const CoCitationNetwork& node_set, bool* no_refs) {
    if (assignment.size() != node_set.nodes.size())
        throw DataError("assignment does not cover the network nodes");
    std::unordered_map<int, int> per_cluster;
    int total = 0;
    for (const auto& ref : paper.references) {
        if (auto i = node_set.index_of(ref)) {
            ++per_cluster[assignment[*i]];
            ++total;
        }
    }
    if (no_refs) *no_refs = (total == 0);
    if (total == 0) return 0.0;
    double e = 0;
    for (const auto& [cluster, count] : per_cluster) {
        double p = static_cast<double>(count) / total;
        e -= p * std::log(p);
    }
    return std::max(e, 0.0);
}

std::optional<double> harmonic(double dm, double cl, double ckl) {
    double num = 3.0 * dm * cl * ckl;
    double den = dm * cl + dm * ckl + cl * ckl;
    if (num == 0.0) return 0.0;
    if (den == 0.0) return std::nullopt;
    return num / den;
}

Baseline build_baseline(const Corpus& corpus, const WindowConfig& config) {
    config.validate();
    Baseline base;
    base.config = config;
    YearWindow window = config.baseline_window();
    auto nodes = select_nodes(corpus, window, config.k, config.min_citations);
    base.network = build_cocitation(corpus, window, nodes, config.lrf,
                                    config.max_links, config.lby);
    base.partition = louvain(base.network, config.seed);
    base.q = base.partition.q;
    base.linkage_score = base.partition.cluster_count == 0
                             ? 0.0
                             : linkage(base.network, base.partition.assignment,
                                       base.partition.cluster_count);
    base.centrality = betweenness(base.network);
    return base;
}

SvaScores score_paper(const Baseline& baseline, const PaperRecord& paper,
                      const SmoothingConfig& smoothing, NovelLinkReport* report_out) {
    auto [ga, report] = augment(baseline.network, baseline.partition.assignment, paper);

    SvaScores s;
    s.paper_id = paper.id;
    s.citation_count = paper.citation_count;
    s.novel_within_count = static_cast<int>(report.novel_within.size());
    s.novel_between_count = static_cast<int>(report.novel_between.size());
    s.existing_count = static_cast<int>(report.existing_links.size());
    s.dropped_pairs = report.dropped_pairs;

    if (!report.has_novel()) {
        // All reference pairs already exist in the baseline: exact zeros.
        s.delta_m = 0.0;
        s.cl = 0.0;
        s.c_kl = 0.0;
        s.h = 0.0;
    } else {
        if (baseline.q != 0.0 && !baseline.partition.edgeless) {
            double qa = modularity(ga, baseline.partition.assignment);
            s.delta_m = 100.0 * (baseline.q - qa) / baseline.q;
        }
        if (baseline.linkage_score != 0.0 && report.total_refs >= 1) {
            double la = linkage(ga, baseline.partition.assignment,
                                baseline.partition.cluster_count);
            s.cl = 100.0 * (la - baseline.linkage_score) / baseline.linkage_score *
                   (static_cast<double>(report.boundary_refs) / report.total_refs);
        }
        s.c_kl = centrality_divergence(baseline.centrality, ga, smoothing);
        if (s.delta_m && s.cl && s.c_kl) s.h = harmonic(*s.delta_m, *s.cl, *s.c_kl);
    }

    auto [alpha, beta] = alpha_beta(report, ga, baseline.partition.assignment);
    s.alpha = alpha;
    s.beta = beta;
    bool no_refs = false;
    s.entropy = entropy(paper, baseline.partition.assignment, baseline.network, &no_refs);
    s.entropy_no_refs = no_refs;

    if (report_out) *report_out = std::move(report);
    return s;
}

std::vector<SvaScores> score_papers(const Baseline& baseline,
                                    const std::vector<const PaperRecord*>& papers,
                                    const SmoothingConfig& smoothing,
                                    std::vector<NovelLinkReport>* reports_out) {
    std::vector<SvaScores> scores(papers.size());
    if (reports_out) reports_out->resize(papers.size());
    parallel_for(papers.size(), [&](std::size_t i) {
        scores[i] = score_paper(baseline, *papers[i], smoothing,
                                reports_out ? &(*reports_out)[i] : nullptr);
    });
    return scores;
}

namespace {

template <typename Get, typename Set>
void rank_metric(std::vector<SvaScores>& scores, Get get, Set set) {
    std::vector<std::pair<double, std::size_t>> defined;
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (auto v = get(scores[i])) defined.push_back({*v, i});
    std::sort(defined.begin(), defined.end(), [](const auto& a, const auto& b) {
        return a.first > b.first;
    });
    // Competition ranking: ties share the minimum rank.
    for (std::size_t i = 0; i < defined.size(); ++i) {
        std::size_t r = i;
        while (r > 0 && defined[r - 1].first == defined[i].first) --r;
        set(scores[defined[i].second], static_cast<int>(r + 1));
    }
    int last = static_cast<int>(defined.size()) + 1;
    for (auto& s : scores)
        if (!get(s)) set(s, last);
}

}  // namespace

void assign_ranks(std::vector<SvaScores>& scores) {
    rank_metric(scores, [](const SvaScores& s) { return s.delta_m; },
                [](SvaScores& s, int r) { s.rank_delta_m = r; });
    rank_metric(scores, [](const SvaScores& s) { return s.cl; },
                [](SvaScores& s, int r) { s.rank_cl = r; });
    rank_metric(scores, [](const SvaScores& s) { return s.c_kl; },
                [](SvaScores& s, int r) { s.rank_c_kl = r; });
    rank_metric(scores, [](const SvaScores& s) { return s.h; },
                [](SvaScores& s, int r) { s.rank_h = r; });
    rank_metric(scores, [](const SvaScores& s) { return s.alpha; },
                [](SvaScores& s, int r) { s.rank_alpha = r; });
    rank_metric(scores, [](const SvaScores& s) { return s.beta; },
                [](SvaScores& s, int r) { s.rank_beta = r; });
    rank_metric(scores, [](const SvaScores& s) { return s.entropy; },
                [](SvaScores& s, int r) { s.rank_entropy = r; });
}

std::vector<SvaScores> score_cohort(const Corpus& corpus, const WindowConfig& config,
                                    const SmoothingConfig& smoothing,
                                    const std::vector<std::string>* targets) {
    Baseline baseline = build_baseline(corpus, config);

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
            if (rec.year == config.target_year && !rec.references.empty())
                cohort.push_back(&rec);
    }

    std::vector<SvaScores> scores = score_papers(baseline, cohort, smoothing);

    assign_ranks(scores);
    std::sort(scores.begin(), scores.end(), [](const SvaScores& a, const SvaScores& b) {
        if (a.citation_count != b.citation_count) return a.citation_count > b.citation_count;
        return a.paper_id < b.paper_id;
    });
    return scores;
}

namespace {

std::string format_metric(const std::optional<double>& v) {
    if (!v) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", *v);
    return buf;
}

}  // namespace

void write_scores_tsv(std::ostream& out, const std::vector<SvaScores>& scores) {
    out << "paper_id\tcitation_count\tdelta_m\tcl\tc_kl\th\talpha\tbeta\tentropy"
           "\trank_delta_m\trank_cl\trank_c_kl\trank_h\trank_alpha\trank_beta"
           "\trank_entropy\tnovel_within\tnovel_between\texisting\tdropped_pairs\n";
    for (const auto& s : scores) {
        out << s.paper_id << '\t' << s.citation_count << '\t' << format_metric(s.delta_m)
            << '\t' << format_metric(s.cl) << '\t' << format_metric(s.c_kl) << '\t'
            << format_metric(s.h) << '\t' << format_metric(s.alpha) << '\t'
            << format_metric(s.beta) << '\t' << format_metric(s.entropy) << '\t'
            << s.rank_delta_m << '\t' << s.rank_cl << '\t' << s.rank_c_kl << '\t'
            << s.rank_h << '\t' << s.rank_alpha << '\t' << s.rank_beta << '\t'
            << s.rank_entropy << '\t' << s.novel_within_count << '\t'
            << s.novel_between_count << '\t' << s.existing_count << '\t'
            << s.dropped_pairs << '\n';
    }
}

}  // namespace svakit
