#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "svakit/network.hpp"

namespace svakit {

struct Partition {
    std::vector<int> assignment;  // node index -> cluster, labels 0..cluster_count-1
    int cluster_count = 0;        // K
    double q = 0.0;               // modularity of assignment on its source network
    bool edgeless = false;        // q is 0 by convention, not computed
};

// Weighted Newman modularity of the assignment. Throws DataError on an
// edgeless network ("modularity undefined").
double modularity(const CoCitationNetwork& network, const std::vector<int>& assignment);

// Louvain community detection. Node sweep order is ascending index unless a
// seed requests a shuffled order; isolated nodes end up in singleton clusters.
// The reported q always equals modularity(network, assignment) exactly.
Partition louvain(const CoCitationNetwork& network,
                  std::optional<std::uint64_t> seed = std::nullopt);

// Unnormalized shortest-path betweenness (Brandes) on the unweighted skeleton;
// each unordered pair counted once, endpoints excluded. Indexed like nodes.
std::vector<double> betweenness(const CoCitationNetwork& network);

}  // namespace svakit
