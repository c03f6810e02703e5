#include "svakit/network.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "svakit/errors.hpp"

namespace svakit {

std::string YearWindow::label() const {
    if (first == last) return std::to_string(first);
    return std::to_string(first) + "-" + std::to_string(last);
}

void WindowConfig::validate() const {
    if (window_years < 1) throw ConfigError("window_years must be >= 1");
    if (frame_years < 1) throw ConfigError("frame_years must be >= 1");
    if (k < 1) throw ConfigError("k must be >= 1");
    if (lrf < 1) throw ConfigError("lrf must be >= 1");
    if (max_links < 1) throw ConfigError("max_links must be >= 1");
    if (lby < -1) throw ConfigError("lby must be -1 (unlimited) or >= 0");
    if (min_citations < 0) throw ConfigError("e must be >= 0");
}

std::optional<int> CoCitationNetwork::index_of(const std::string& id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) return std::nullopt;
    return static_cast<int>(it - nodes.begin());
}

bool CoCitationNetwork::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges.count({a, b}) > 0;
}

int CoCitationNetwork::weight(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = edges.find({a, b});
    return it == edges.end() ? 0 : it->second;
}

void CoCitationNetwork::add_edge(int a, int b, int w) {
    if (a == b) throw DataError("self-loop on node " + nodes[a]);
    if (a > b) std::swap(a, b);
    edges[{a, b}] += w;
}

double CoCitationNetwork::total_weight() const {
    double w = 0;
    for (const auto& [pair, weight] : edges) w += weight;
    return w;
}

std::vector<std::vector<std::pair<int, int>>> CoCitationNetwork::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(nodes.size());
    for (const auto& [pair, w] : edges) {
        adj[pair.first].emplace_back(pair.second, w);
        adj[pair.second].emplace_back(pair.first, w);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<std::string> select_nodes(const Corpus& corpus, YearWindow window,
                                      int k, int min_citations) {
    if (k < 1) throw ConfigError("k must be >= 1");
    std::unordered_map<std::string, int> counts;
    bool any_citing = false;
    for (const auto& rec : corpus.records()) {
        if (!window.contains(rec.year) || rec.references.empty()) continue;
        any_citing = true;
        for (const auto& ref : rec.references) ++counts[ref];
    }
    if (!any_citing) throw DataError("empty slice");

    std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    // g-index with scaling factor k: largest g whose top-g citation sum
    // reaches g^2 / k. The condition is monotone once it fails.
    long long cum = 0;
    std::size_t g = 0;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        cum += ranked[i].second;
        long long gg = static_cast<long long>(i) + 1;
        if (static_cast<long long>(k) * cum >= gg * gg)
            g = i + 1;
        else
            break;
    }

    std::vector<std::string> selected;
    selected.reserve(g);
    for (std::size_t i = 0; i < g; ++i)
        if (ranked[i].second >= min_citations) selected.push_back(ranked[i].first);
    return selected;
}

CoCitationNetwork build_cocitation(const Corpus& corpus, YearWindow window,
                                   const std::vector<std::string>& nodes,
                                   int lrf, int max_links, int lby) {
    CoCitationNetwork net;
    net.nodes = nodes;
    std::sort(net.nodes.begin(), net.nodes.end());
    net.nodes.erase(std::unique(net.nodes.begin(), net.nodes.end()), net.nodes.end());
    net.provenance = window.label();

    std::map<std::pair<int, int>, int> raw;
    for (const auto& rec : corpus.records()) {
        if (!window.contains(rec.year)) continue;
        std::vector<int> idx;
        for (const auto& ref : rec.references) {
            if (lby >= 0) {
                // Look-back bound applies only to references with a known year.
                const PaperRecord* cited = corpus.find(ref);
                if (cited && cited->year < rec.year - lby) continue;
            }
            if (auto i = net.index_of(ref)) idx.push_back(*i);
        }
        std::sort(idx.begin(), idx.end());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                ++raw[{idx[a], idx[b]}];
    }

    // Strongest-first order: weight descending, then the lexicographically
    // smaller node pair. Node indices follow the sorted id order, so index
    // pairs compare the same way the id pairs do.
    using Entry = std::pair<std::pair<int, int>, int>;
    auto stronger = [](const Entry& a, const Entry& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    };

    // Per-node cap with union semantics: an edge survives when either endpoint
    // ranks it within its max_links strongest.
    std::vector<std::vector<Entry>> incident(net.nodes.size());
    for (const auto& e : raw) {
        incident[e.first.first].push_back(e);
        incident[e.first.second].push_back(e);
    }
    std::set<std::pair<int, int>> survivors;
    for (auto& list : incident) {
        std::sort(list.begin(), list.end(), stronger);
        for (std::size_t i = 0; i < list.size() && i < static_cast<std::size_t>(max_links); ++i)
            survivors.insert(list[i].first);
    }

    // Global cap: lrf * node_count strongest surviving edges.
    std::vector<Entry> kept;
    kept.reserve(survivors.size());
    for (const auto& key : survivors) kept.push_back({key, raw.at(key)});
    std::sort(kept.begin(), kept.end(), stronger);
    std::size_t cap = static_cast<std::size_t>(lrf) * net.nodes.size();
    if (kept.size() > cap) kept.resize(cap);

    for (const auto& e : kept) net.edges.emplace(e.first, e.second);
    return net;
}

std::pair<CoCitationNetwork, NovelLinkReport> augment(
    const CoCitationNetwork& baseline, const std::vector<int>& assignment,
    const PaperRecord& paper) {
    if (assignment.size() != baseline.nodes.size())
        throw DataError("assignment does not cover the baseline nodes");

    NovelLinkReport report;
    report.paper_id = paper.id;
    report.total_refs = paper.reference_count();

    std::vector<int> idx;
    for (const auto& ref : paper.references)
        if (auto i = baseline.index_of(ref)) idx.push_back(*i);
    std::sort(idx.begin(), idx.end());
    report.in_network_refs = static_cast<int>(idx.size());
    long long total_pairs =
        static_cast<long long>(report.total_refs) * (report.total_refs - 1) / 2;
    long long usable_pairs =
        static_cast<long long>(idx.size()) * (static_cast<long long>(idx.size()) - 1) / 2;
    report.dropped_pairs = static_cast<int>(total_pairs - usable_pairs);

    CoCitationNetwork augmented = baseline;
    augmented.provenance = baseline.provenance + "+" + paper.id;
    std::set<int> boundary;
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            std::pair<int, int> pair{idx[a], idx[b]};
            if (baseline.has_edge(pair.first, pair.second)) {
                report.existing_links.push_back(pair);
            } else if (assignment[pair.first] == assignment[pair.second]) {
                report.novel_within.push_back(pair);
                augmented.add_edge(pair.first, pair.second, 1);
            } else {
                report.novel_between.push_back(pair);
                augmented.add_edge(pair.first, pair.second, 1);
                boundary.insert(pair.first);
                boundary.insert(pair.second);
            }
        }
    }
    report.boundary_refs = static_cast<int>(boundary.size());
    return {std::move(augmented), std::move(report)};
}

}  // namespace svakit
