#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svakit/corpus.hpp"

namespace svakit {

// Inclusive year range.
struct YearWindow {
    int first = 0;
    int last = 0;
    bool contains(int year) const { return year >= first && year <= last; }
    std::string label() const;
};

struct WindowConfig {
    int target_year = 0;
    int window_years = 5;  // sliding window width for the baseline network
    int frame_years = 5;   // analysis time frame; echoed in provenance
    int k = 5;             // g-index scaling factor
    int lrf = 3;           // global cap: lrf * node_count strongest links survive
    int max_links = 10;    // per-node cap on strongest links
    int lby = -1;          // look-back years for references; -1 = unlimited
    int min_citations = 0; // the e threshold: in-window citation floor
    std::optional<std::uint64_t> seed;  // randomized Louvain sweep order

    YearWindow baseline_window() const {
        return {target_year - window_years, target_year - 1};
    }
    void validate() const;  // throws ConfigError naming the offending field
};

// Weighted undirected co-citation graph over cited references.
// Nodes are sorted ascending; edges are keyed (i, j) with i < j.
struct CoCitationNetwork {
    std::vector<std::string> nodes;
    std::map<std::pair<int, int>, int> edges;
    std::string provenance;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::optional<int> index_of(const std::string& id) const;
    bool has_edge(int a, int b) const;
    int weight(int a, int b) const;  // 0 when absent
    void add_edge(int a, int b, int w = 1);
    double total_weight() const;
    // Adjacency lists as (neighbor index, weight), neighbors ascending.
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;

    friend bool operator==(const CoCitationNetwork& a, const CoCitationNetwork& b) {
        return a.nodes == b.nodes && a.edges == b.edges;
    }
};

// How one citing paper's reference pairs relate to the baseline network.
// The three pair sets are disjoint; pairs touching references outside the
// baseline node set are dropped and only counted.
struct NovelLinkReport {
    std::string paper_id;
    std::vector<std::pair<int, int>> novel_within;
    std::vector<std::pair<int, int>> novel_between;
    std::vector<std::pair<int, int>> existing_links;
    int boundary_refs = 0;   // refs participating in novel between-cluster links
    int total_refs = 0;      // all references of the paper
    int in_network_refs = 0;
    int dropped_pairs = 0;

    bool has_novel() const { return !novel_within.empty() || !novel_between.empty(); }
};

// Top-g most cited references in the window, ranked by descending in-window
// citation count (ties ascending id); g is the largest value whose top-g
// citation sum is at least g^2 / k. References with fewer than min_citations
// in-window citations are dropped from the selection afterwards.
std::vector<std::string> select_nodes(const Corpus& corpus, YearWindow window,
                                      int k, int min_citations);

// Co-citation counting over citing papers in the window, restricted to the
// given node set, then pruned: per-node max_links cap with union semantics,
// followed by a global lrf * node_count cap on the survivors.
CoCitationNetwork build_cocitation(const Corpus& corpus, YearWindow window,
                                   const std::vector<std::string>& nodes,
                                   int lrf, int max_links, int lby);

// Baseline plus the paper's novel co-citation links (weight 1, both endpoints
// already baseline nodes). assignment maps node index -> cluster and decides
// the within/between split of novel pairs.
std::pair<CoCitationNetwork, NovelLinkReport> augment(
    const CoCitationNetwork& baseline, const std::vector<int>& assignment,
    const PaperRecord& paper);

}  // namespace svakit
