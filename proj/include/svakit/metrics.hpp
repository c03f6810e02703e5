#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svakit/analytics.hpp"

namespace svakit {

// Additive smoothing for the centrality divergence; both distributions get
// epsilon added to every score before normalization.
struct SmoothingConfig {
    double epsilon = 1e-9;
};

// Weighting hook for between-cluster links in the linkage score.
enum class LinkWeighting { unit, weight };

// Per-paper structural variation bundle. Metrics that are undefined for a
// paper (zero baseline modularity or linkage, degenerate harmonic) stay empty
// and rank last.
struct SvaScores {
    std::string paper_id;
    int citation_count = 0;
    std::optional<double> delta_m;  // modularity change rate, percent
    std::optional<double> cl;       // cluster linkage, percent, weighted by boundary-ref share
    std::optional<double> c_kl;     // betweenness divergence, nats
    std::optional<double> h;        // harmonic mean of the three above
    std::optional<double> alpha;    // novel within-cluster link rate
    std::optional<double> beta;     // novel between-cluster link rate
    std::optional<double> entropy;  // cluster entropy of cited references, nats

    // Descending ranks within the scored cohort; ties share the minimum rank,
    // missing values rank after every defined one.
    int rank_delta_m = 0, rank_cl = 0, rank_c_kl = 0, rank_h = 0;
    int rank_alpha = 0, rank_beta = 0, rank_entropy = 0;

    // Novel-link evidence.
    int novel_within_count = 0;
    int novel_between_count = 0;
    int existing_count = 0;
    int dropped_pairs = 0;
    bool entropy_no_refs = false;  // paper had no references inside the network
};

// 100 * (Q(gs,C) - Q(ga,C)) / Q(gs,C), both against the same baseline
// assignment. Throws DataError when the baseline modularity is zero.
double delta_m(const CoCitationNetwork& gs, const CoCitationNetwork& ga,
               const std::vector<int>& assignment);

// Sum of lambda_ij * eps_ij over ordered node pairs, divided by K; lambda is 1
// iff an edge joins nodes of different clusters. Each undirected bridge edge
// contributes twice.
double linkage(const CoCitationNetwork& network, const std::vector<int>& assignment,
               int cluster_count, LinkWeighting weighting = LinkWeighting::unit);

// 100 * relative linkage change * boundary_refs/total_refs. Throws DataError
// when the baseline linkage is zero.
double cluster_linkage(const CoCitationNetwork& gs, const CoCitationNetwork& ga,
                       const std::vector<int>& assignment, int cluster_count,
                       int boundary_refs, int total_refs,
                       LinkWeighting weighting = LinkWeighting::unit);

// KL divergence between smoothed, normalized betweenness distributions of gs
// and ga over the shared node set. Non-negative.
double centrality_divergence(const CoCitationNetwork& gs, const CoCitationNetwork& ga,
                             const SmoothingConfig& smoothing = {});
double centrality_divergence(const std::vector<double>& baseline_betweenness,
                             const CoCitationNetwork& ga,
                             const SmoothingConfig& smoothing = {});

// Novel link rates over all within-cluster / between-cluster links of ga.
// A zero denominator yields 0.
std::pair<double, double> alpha_beta(const NovelLinkReport& report,
                                     const CoCitationNetwork& ga,
                                     const std::vector<int>& assignment);

// Shannon entropy (nats) of the paper's in-network references over clusters.
// Zero in-network references yields 0 and sets *no_refs when provided.
double entropy(const PaperRecord& paper, const std::vector<int>& assignment,
               const CoCitationNetwork& node_set, bool* no_refs = nullptr);

// 3abc / (ab + ac + bc), applied literally even for negative inputs. A zero
// numerator yields 0; a zero denominator with nonzero numerator is undefined.
std::optional<double> harmonic(double dm, double cl, double ckl);

// Baseline artifacts shared by every paper scored against one target year.
struct Baseline {
    CoCitationNetwork network;
    Partition partition;
    std::vector<double> centrality;  // baseline betweenness
    double q = 0.0;                  // modularity(network, partition)
    double linkage_score = 0.0;
    WindowConfig config;
};

// Builds nodes, network, partition, and baseline statistics for the config's
// target year. Throws DataError("empty slice") when the window has no citing
// papers.
Baseline build_baseline(const Corpus& corpus, const WindowConfig& config);

// Full metric bundle for one paper against a shared baseline; ranks are left
// unset. Papers whose reference pairs all exist in the baseline score exactly
// zero on delta_m, cl, c_kl, and h.
SvaScores score_paper(const Baseline& baseline, const PaperRecord& paper,
                      const SmoothingConfig& smoothing = {},
                      NovelLinkReport* report_out = nullptr);

// Scores the papers concurrently against the shared read-only baseline;
// results (and reports, when requested) keep the input order.
std::vector<SvaScores> score_papers(const Baseline& baseline,
                                    const std::vector<const PaperRecord*>& papers,
                                    const SmoothingConfig& smoothing = {},
                                    std::vector<NovelLinkReport>* reports_out = nullptr);

// Scores every citing paper published in the target year (or only `targets`
// when given) against one shared baseline, assigns per-metric ranks, and
// sorts by in-corpus citation count descending (ties ascending id).
std::vector<SvaScores> score_cohort(const Corpus& corpus, const WindowConfig& config,
                                    const SmoothingConfig& smoothing = {},
                                    const std::vector<std::string>* targets = nullptr);

// Competition ranking (descending, ties share the minimum rank) per metric.
void assign_ranks(std::vector<SvaScores>& scores);

// Tab-separated score table with a fixed column order; missing metrics are
// empty fields. Byte-deterministic for identical inputs.
void write_scores_tsv(std::ostream& out, const std::vector<SvaScores>& scores);

}  // namespace svakit
