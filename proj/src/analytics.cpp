#include "svakit/analytics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>

#include "svakit/errors.hpp"

namespace svakit {

double modularity(const CoCitationNetwork& network, const std::vector<int>& assignment) {
    if (assignment.size() != network.nodes.size())
        throw DataError("assignment does not cover the network nodes");
    double total = network.total_weight();
    if (total <= 0) throw DataError("modularity undefined");

    // Q = sum_c [ w_in(c)/W - (deg_w(c) / 2W)^2 ]
    std::unordered_map<int, double> w_in, deg;
    for (const auto& [pair, w] : network.edges) {
        int ca = assignment[pair.first];
        int cb = assignment[pair.second];
        deg[ca] += w;
        deg[cb] += w;
        if (ca == cb) w_in[ca] += w;
    }
    double q = 0;
    for (const auto& [cluster, d] : deg) {
        double in = 0;
        if (auto it = w_in.find(cluster); it != w_in.end()) in = it->second;
        double frac = d / (2.0 * total);
        q += in / total - frac * frac;
    }
    return q;
}

namespace {

// Aggregated graph for one Louvain level. Self-loop weights hold the internal
// weight of contracted communities and count twice toward a node's strength.
struct LevelGraph {
    std::vector<std::vector<std::pair<int, double>>> adj;
    std::vector<double> self_loop;
    std::vector<double> strength;
    double total = 0;  // sum of edge weights, self-loops once

    int size() const { return static_cast<int>(adj.size()); }
};

LevelGraph to_level_graph(const CoCitationNetwork& network) {
    LevelGraph g;
    g.adj.resize(network.nodes.size());
    g.self_loop.assign(network.nodes.size(), 0.0);
    g.strength.assign(network.nodes.size(), 0.0);
    for (const auto& [pair, w] : network.edges) {
        g.adj[pair.first].emplace_back(pair.second, w);
        g.adj[pair.second].emplace_back(pair.first, w);
        g.strength[pair.first] += w;
        g.strength[pair.second] += w;
        g.total += w;
    }
    return g;
}

// One local-moving phase; returns true when at least one node changed
// community. Communities are tracked in `community` (labels are node indices).
bool local_moving(const LevelGraph& g, std::vector<int>& community,
                  const std::vector<int>& order) {
    const double w2 = 2.0 * g.total * g.total;
    std::vector<double> community_strength(g.size(), 0.0);
    for (int v = 0; v < g.size(); ++v) community_strength[community[v]] += g.strength[v];

    bool any_move = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v : order) {
            int home = community[v];
            community_strength[home] -= g.strength[v];

            // Weight from v to each neighboring community, in ascending
            // community order for deterministic tie handling.
            std::map<int, double> links;
            links[home];  // staying is always a candidate
            for (const auto& [u, w] : g.adj[v])
                if (u != v) links[community[u]] += w;

            double stay_gain = links[home] / g.total -
                               community_strength[home] * g.strength[v] / w2;
            int best = home;
            double best_gain = stay_gain;
            for (const auto& [c, l] : links) {
                if (c == home) continue;
                double gain = l / g.total - community_strength[c] * g.strength[v] / w2;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            community[v] = best;
            community_strength[best] += g.strength[v];
            if (best != home) {
                improved = true;
                any_move = true;
            }
        }
    }
    return any_move;
}

LevelGraph contract(const LevelGraph& g, const std::vector<int>& community,
                    std::vector<int>& relabel) {
    relabel.assign(g.size(), -1);
    int next = 0;
    for (int v = 0; v < g.size(); ++v)
        if (relabel[community[v]] == -1) relabel[community[v]] = next++;

    LevelGraph coarse;
    coarse.adj.resize(next);
    coarse.self_loop.assign(next, 0.0);
    coarse.strength.assign(next, 0.0);
    coarse.total = g.total;

    std::map<std::pair<int, int>, double> edges;
    for (int v = 0; v < g.size(); ++v) {
        int cv = relabel[community[v]];
        coarse.self_loop[cv] += g.self_loop[v];
        for (const auto& [u, w] : g.adj[v]) {
            if (u < v) continue;  // undirected edges once
            int cu = relabel[community[u]];
            if (cv == cu)
                coarse.self_loop[cv] += w;
            else
                edges[{std::min(cv, cu), std::max(cv, cu)}] += w;
        }
    }
    for (const auto& [pair, w] : edges) {
        coarse.adj[pair.first].emplace_back(pair.second, w);
        coarse.adj[pair.second].emplace_back(pair.first, w);
    }
    for (int v = 0; v < next; ++v) {
        double s = 2.0 * coarse.self_loop[v];
        for (const auto& [u, w] : coarse.adj[v]) s += w;
        coarse.strength[v] = s;
    }
    return coarse;
}

}  // namespace

Partition louvain(const CoCitationNetwork& network, std::optional<std::uint64_t> seed) {
    Partition part;
    part.assignment.assign(network.nodes.size(), 0);
    if (network.edges.empty()) {
        // Every node a singleton; Q is 0 by convention.
        std::iota(part.assignment.begin(), part.assignment.end(), 0);
        part.cluster_count = static_cast<int>(network.nodes.size());
        part.q = 0.0;
        part.edgeless = true;
        return part;
    }

    LevelGraph level = to_level_graph(network);
    // membership[v] = community of original node v, expressed in the current
    // level's node labels.
    std::vector<int> membership(network.nodes.size());
    std::iota(membership.begin(), membership.end(), 0);

    while (true) {
        std::vector<int> community(level.size());
        std::iota(community.begin(), community.end(), 0);
        std::vector<int> order(level.size());
        std::iota(order.begin(), order.end(), 0);
        if (seed) {
            std::mt19937_64 rng(*seed);
            std::shuffle(order.begin(), order.end(), rng);
        }
        if (!local_moving(level, community, order)) break;

        std::vector<int> relabel;
        LevelGraph coarse = contract(level, community, relabel);
        for (auto& m : membership) m = relabel[community[m]];
        if (coarse.size() == level.size()) break;
        level = std::move(coarse);
    }

    // Compact cluster labels in node order.
    std::unordered_map<int, int> compact;
    for (std::size_t v = 0; v < membership.size(); ++v) {
        auto [it, inserted] = compact.emplace(membership[v], static_cast<int>(compact.size()));
        part.assignment[v] = it->second;
    }
    part.cluster_count = static_cast<int>(compact.size());
    part.q = modularity(network, part.assignment);
    return part;
}

std::vector<double> betweenness(const CoCitationNetwork& network) {
    int n = static_cast<int>(network.nodes.size());
    std::vector<double> score(n, 0.0);
    auto adj = network.adjacency();

    // Brandes accumulation over the unweighted skeleton.
    std::vector<int> dist(n), stack_order;
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<int>> preds(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        stack_order.clear();
        queue.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        queue.push_back(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            stack_order.push_back(v);
            for (const auto& [u, w] : adj[v]) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
                if (dist[u] == dist[v] + 1) {
                    sigma[u] += sigma[v];
                    preds[u].push_back(v);
                }
            }
        }
        for (auto it = stack_order.rbegin(); it != stack_order.rend(); ++it) {
            int w = *it;
            for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) score[w] += delta[w];
        }
    }
    // Each unordered pair was counted from both endpoints.
    for (auto& x : score) x /= 2.0;
    return score;
}

}  // namespace svakit
