#pragma once
// Shared corpus and network builders for the unit and acceptance suites.
#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "svakit/corpus.hpp"
#include "svakit/network.hpp"

namespace fixtures {

inline svakit::PaperRecord rec(std::string id, int year,
                               std::vector<std::string> refs) {
    svakit::PaperRecord r;
    r.id = std::move(id);
    r.year = year;
    r.references = std::move(refs);
    return r;
}

// Network from explicit edges; nodes may include isolated ones.
inline svakit::CoCitationNetwork net(
    std::vector<std::string> nodes,
    const std::vector<std::tuple<std::string, std::string, int>>& edges) {
    svakit::CoCitationNetwork n;
    n.nodes = std::move(nodes);
    std::sort(n.nodes.begin(), n.nodes.end());
    n.provenance = "fixture";
    for (const auto& [a, b, w] : edges)
        n.add_edge(*n.index_of(a), *n.index_of(b), w);
    return n;
}

inline svakit::CoCitationNetwork two_triangles() {
    return net({"A", "B", "C", "D", "E", "F"},
               {{"A", "B", 1}, {"B", "C", 1}, {"A", "C", 1},
                {"D", "E", 1}, {"E", "F", 1}, {"D", "F", 1}});
}

inline svakit::CoCitationNetwork path3() {
    return net({"A", "B", "C"}, {{"A", "B", 1}, {"B", "C", 1}});
}

inline svakit::CoCitationNetwork star5() {
    return net({"H", "l1", "l2", "l3", "l4"},
               {{"H", "l1", 1}, {"H", "l2", 1}, {"H", "l3", 1}, {"H", "l4", 1}});
}

inline svakit::CoCitationNetwork complete(int n) {
    std::vector<std::string> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back("n" + std::to_string(i));
    svakit::CoCitationNetwork g;
    g.nodes = nodes;
    g.provenance = "fixture";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, 1);
    return g;
}

inline std::string pool_ref(char pool, int i) {
    return std::string(1, pool) + std::to_string(i);
}

// Two well-separated reference pools (a0..a7, b0..b7) plus 20 singly-cited
// tail references; 64 baseline citing papers in 2005-2009, a planted
// cross-pool paper and 10 within-pool papers in 2010.
inline svakit::Corpus planted_corpus() {
    std::vector<svakit::PaperRecord> records;
    int year = 2005;
    auto next_year = [&]() {
        int y = year;
        year = year == 2009 ? 2005 : year + 1;
        return y;
    };
    for (char pool : {'a', 'b'}) {
        for (int i = 0; i < 4; ++i) {  // reviews citing the whole pool
            std::vector<std::string> refs;
            for (int j = 0; j < 8; ++j) refs.push_back(pool_ref(pool, j));
            records.push_back(rec(std::string("rev_") + pool + std::to_string(i),
                                  next_year(), refs));
        }
        for (int i = 0; i < 18; ++i) {  // rolling triples
            records.push_back(rec(
                std::string("tri_") + pool + std::to_string(i), next_year(),
                {pool_ref(pool, i % 8), pool_ref(pool, (i + 1) % 8),
                 pool_ref(pool, (i + 2) % 8)}));
        }
    }
    for (int j = 0; j < 20; ++j) {  // tail papers: one tail ref + one pool ref
        char pool = j % 2 == 0 ? 'a' : 'b';
        std::string tail = "t" + std::string(j < 10 ? "0" : "") + std::to_string(j);
        records.push_back(
            rec("tp" + std::to_string(j), next_year(), {tail, pool_ref(pool, j % 8)}));
    }
    // 2010 cohort: the planted boundary spanner plus 10 within-pool papers.
    records.push_back(rec("x-planted", 2010,
                          {"a0", "a1", "a2", "b0", "b1", "b2"}));
    for (int i = 0; i < 5; ++i) {
        std::string tail = "t0" + std::to_string(2 * i);
        records.push_back(rec("w" + std::to_string(i), 2010,
                              {tail, pool_ref('a', (2 * i + 3) % 8)}));
    }
    for (int i = 5; i < 10; ++i) {
        records.push_back(rec("w" + std::to_string(i), 2010,
                              {pool_ref('b', i % 8), pool_ref('b', (i + 1) % 8)}));
    }
    return svakit::Corpus::from_records(std::move(records));
}

// Two 4-reference cliques with the mixed cross pairs (a0-b1, a1-b0) already
// present, so that a pseudopaper of the two 2010 seeds adds exactly the union
// of the seeds' own novel links.
inline svakit::Corpus union_property_corpus() {
    std::vector<svakit::PaperRecord> records;
    int year = 2005;
    auto next_year = [&]() {
        int y = year;
        year = year == 2009 ? 2005 : year + 1;
        return y;
    };
    for (char pool : {'a', 'b'}) {
        for (int i = 0; i < 6; ++i) {
            std::vector<std::string> refs;
            for (int j = 0; j < 4; ++j) refs.push_back(pool_ref(pool, j));
            records.push_back(rec(std::string("base_") + pool + std::to_string(i),
                                  next_year(), refs));
        }
    }
    records.push_back(rec("cross1", 2007, {"a0", "b1"}));
    records.push_back(rec("cross2", 2008, {"a1", "b0"}));
    records.push_back(rec("s1", 2010, {"a0", "b0"}));
    records.push_back(rec("s2", 2010, {"a1", "b1"}));
    return svakit::Corpus::from_records(std::move(records));
}

// Small connected baseline with nonzero modularity; the 2010 target paper's
// only reference pair already exists.
inline svakit::Corpus zero_novelty_corpus() {
    std::vector<svakit::PaperRecord> records;
    for (int i = 0; i < 3; ++i)
        records.push_back(rec("ab" + std::to_string(i), 2005 + i, {"A", "B"}));
    for (int i = 0; i < 3; ++i)
        records.push_back(rec("cd" + std::to_string(i), 2005 + i, {"C", "D"}));
    records.push_back(rec("bridge", 2008, {"B", "C"}));
    records.push_back(rec("target", 2010, {"A", "B"}));
    return svakit::Corpus::from_records(std::move(records));
}

}  // namespace fixtures
