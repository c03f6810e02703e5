#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "svakit/errors.hpp"
#include "svakit/network.hpp"

using namespace svakit;
using fixtures::rec;

namespace {

Corpus counts_corpus() {
    // In-window citation counts: X=3, Y=2, Z=1.
    return Corpus::from_records({rec("p1", 2005, {"X", "Y", "Z"}),
                                 rec("p2", 2006, {"X", "Y"}),
                                 rec("p3", 2007, {"X"})});
}

}  // namespace

TEST_CASE("g-index selection") {
    Corpus c = counts_corpus();
    YearWindow w{2005, 2009};
    SUBCASE("counts [3,2,1] with k=1 give g=2") {
        auto nodes = select_nodes(c, w, 1, 0);
        CHECK(nodes == std::vector<std::string>{"x", "y"});
    }
    SUBCASE("counts [3,2,1] with k=3 give g=3") {
        auto nodes = select_nodes(c, w, 3, 0);
        CHECK(nodes == std::vector<std::string>{"x", "y", "z"});
    }
    SUBCASE("single candidate gives g=1") {
        Corpus one = Corpus::from_records({rec("p", 2005, {"R"}), rec("q", 2004, {"R"}),
                                           rec("r", 2005, {"R"}),
                                           rec("s", 2005, {"R"}),
                                           rec("t", 2005, {"R"})});
        for (int k : {1, 3, 10})
            CHECK(select_nodes(one, w, k, 0) == std::vector<std::string>{"r"});
    }
    SUBCASE("empty slice") {
        CHECK_THROWS_WITH_AS(select_nodes(c, YearWindow{1990, 1995}, 1, 0),
                             "empty slice", DataError);
    }
    SUBCASE("citation floor e drops low-count references after the cut") {
        auto nodes = select_nodes(c, w, 3, 2);
        CHECK(nodes == std::vector<std::string>{"x", "y"});
    }
    SUBCASE("monotone in k") {
        Corpus planted = fixtures::planted_corpus();
        YearWindow bw{2005, 2009};
        std::size_t prev = 0;
        for (int k : {1, 2, 5, 10, 15, 20, 25}) {
            auto nodes = select_nodes(planted, bw, k, 0);
            auto prev_nodes = select_nodes(planted, bw, std::max(1, k - 1), 0);
            for (const auto& id : prev_nodes)
                CHECK(std::find(nodes.begin(), nodes.end(), id) != nodes.end());
            CHECK(nodes.size() >= prev);
            prev = nodes.size();
        }
    }
}

TEST_CASE("co-citation counting") {
    YearWindow w{2005, 2009};
    SUBCASE("each co-cited pair gets weight one") {
        Corpus c = Corpus::from_records(
            {rec("p1", 2005, {"A", "B"}), rec("p2", 2006, {"B", "C"})});
        auto net = build_cocitation(c, w, {"a", "b", "c"}, 3, 10, -1);
        CHECK(net.edge_count() == 2);
        CHECK(net.weight(*net.index_of("a"), *net.index_of("b")) == 1);
        CHECK(net.weight(*net.index_of("b"), *net.index_of("c")) == 1);
    }
    SUBCASE("repeated co-citation accumulates weight") {
        Corpus c = Corpus::from_records(
            {rec("p1", 2005, {"A", "B"}), rec("p2", 2006, {"A", "B"})});
        auto net = build_cocitation(c, w, {"a", "b"}, 3, 10, -1);
        CHECK(net.weight(0, 1) == 2);
    }
    SUBCASE("a window with no co-citations yields an edgeless network") {
        Corpus c = Corpus::from_records({rec("p1", 2005, {"A"}), rec("p2", 2006, {"B"})});
        auto net = build_cocitation(c, w, {"a", "b"}, 3, 10, -1);
        CHECK(net.edge_count() == 0);
        CHECK(net.node_count() == 2);
    }
    SUBCASE("look-back years exempt references without a known year") {
        Corpus c = Corpus::from_records({rec("old", 1990, {}), rec("new", 2004, {}),
                                         rec("p", 2005, {"old", "new", "nodate"})});
        auto all = build_cocitation(c, w, {"old", "new", "nodate"}, 3, 10, -1);
        CHECK(all.edge_count() == 3);
        auto limited = build_cocitation(c, w, {"old", "new", "nodate"}, 3, 10, 5);
        // "old" is 15 years back and excluded; "nodate" has no year and stays.
        CHECK(limited.edge_count() == 1);
        CHECK(limited.has_edge(*limited.index_of("new"), *limited.index_of("nodate")));
    }
}

TEST_CASE("pruning") {
    YearWindow w{2005, 2009};
    SUBCASE("per-node cap uses union semantics: the full star survives") {
        // Star around H with spoke weights 4, 3, 2, 1 and max_links = 1.
        std::vector<PaperRecord> records;
        int id = 0;
        auto add_pair = [&](const std::string& a, const std::string& b, int copies) {
            for (int i = 0; i < copies; ++i)
                records.push_back(rec("p" + std::to_string(id++), 2005, {a, b}));
        };
        add_pair("H", "s1", 4);
        add_pair("H", "s2", 3);
        add_pair("H", "s3", 2);
        add_pair("H", "s4", 1);
        Corpus c = Corpus::from_records(std::move(records));
        auto net = build_cocitation(c, w, {"h", "s1", "s2", "s3", "s4"}, 3, 1, -1);
        CHECK(net.edge_count() == 4);  // every spoke keeps its only edge
    }
    SUBCASE("per-node cap keeps each node's strongest edge") {
        std::vector<PaperRecord> records;
        int id = 0;
        auto add_pair = [&](const std::string& a, const std::string& b, int copies) {
            for (int i = 0; i < copies; ++i)
                records.push_back(rec("p" + std::to_string(id++), 2005, {a, b}));
        };
        add_pair("A", "B", 3);
        add_pair("B", "C", 2);
        add_pair("A", "C", 1);
        Corpus c = Corpus::from_records(std::move(records));
        auto all = build_cocitation(c, w, {"a", "b", "c"}, 1, 10, -1);
        CHECK(all.edge_count() == 3);
        auto capped = build_cocitation(c, w, {"a", "b", "c"}, 1, 1, -1);
        // A keeps A-B, B keeps A-B, C keeps B-C.
        CHECK(capped.edge_count() == 2);
        CHECK(capped.has_edge(*capped.index_of("a"), *capped.index_of("b")));
        CHECK(capped.has_edge(*capped.index_of("b"), *capped.index_of("c")));
    }
    SUBCASE("global cap keeps the lrf * nodes strongest survivors") {
        std::vector<PaperRecord> records;
        int id = 0;
        auto add_pair = [&](const std::string& a, const std::string& b, int copies) {
            for (int i = 0; i < copies; ++i)
                records.push_back(rec("p" + std::to_string(id++), 2005, {a, b}));
        };
        // Complete graph on four nodes with distinct weights.
        add_pair("A", "B", 6);
        add_pair("A", "C", 5);
        add_pair("A", "D", 4);
        add_pair("B", "C", 3);
        add_pair("B", "D", 2);
        add_pair("C", "D", 1);
        Corpus c = Corpus::from_records(std::move(records));
        auto capped = build_cocitation(c, w, {"a", "b", "c", "d"}, 1, 10, -1);
        CHECK(capped.edge_count() == 4);  // cap = 1 * 4 nodes
        CHECK(capped.has_edge(*capped.index_of("a"), *capped.index_of("b")));
        CHECK(capped.has_edge(*capped.index_of("b"), *capped.index_of("c")));
        CHECK_FALSE(capped.has_edge(*capped.index_of("c"), *capped.index_of("d")));
    }
    SUBCASE("pruning never raises weights or invents edges") {
        Corpus c = fixtures::planted_corpus();
        auto nodes = select_nodes(c, w, 25, 0);
        auto loose = build_cocitation(c, w, nodes, 100, 1000, -1);
        auto tight = build_cocitation(c, w, nodes, 2, 3, -1);
        CHECK(tight.edge_count() <= loose.edge_count());
        for (const auto& [pair, weight] : tight.edges) {
            CHECK(loose.edges.count(pair) == 1);
            CHECK(loose.edges.at(pair) == weight);
        }
    }
}

TEST_CASE("augment") {
    auto baseline = fixtures::two_triangles();
    std::vector<int> clusters = {0, 0, 0, 1, 1, 1};  // A,B,C / D,E,F

    SUBCASE("existing pair only") {
        auto [ga, report] = augment(baseline, clusters, rec("p", 2010, {"A", "B"}));
        CHECK(ga == baseline);
        CHECK(report.existing_links.size() == 1);
        CHECK_FALSE(report.has_novel());
    }
    SUBCASE("novel between-cluster pair") {
        auto [ga, report] = augment(baseline, clusters, rec("p", 2010, {"A", "D"}));
        CHECK(report.novel_between.size() == 1);
        CHECK(report.boundary_refs == 2);
        CHECK(report.total_refs == 2);
        CHECK(ga.edge_count() == baseline.edge_count() + 1);
    }
    SUBCASE("three references produce two between links and one existing") {
        auto [ga, report] = augment(baseline, clusters, rec("p", 2010, {"A", "B", "D"}));
        CHECK(report.novel_between.size() == 2);
        CHECK(report.novel_within.empty());
        CHECK(report.existing_links.size() == 1);
        CHECK(report.boundary_refs == 3);
        CHECK(report.total_refs == 3);
    }
    SUBCASE("references outside the baseline are dropped and counted") {
        auto [ga, report] = augment(baseline, clusters, rec("p", 2010, {"A", "Q", "R"}));
        CHECK(report.in_network_refs == 1);
        CHECK(report.dropped_pairs == 3);
        CHECK(ga == baseline);
    }
    SUBCASE("fewer than two usable references is a valid empty report") {
        auto [ga, report] = augment(baseline, clusters, rec("p", 2010, {"A"}));
        CHECK_FALSE(report.has_novel());
        CHECK(report.existing_links.empty());
    }
    SUBCASE("edge count bookkeeping") {
        auto [ga, report] =
            augment(baseline, clusters, rec("p", 2010, {"A", "B", "D", "E"}));
        CHECK(ga.edge_count() == baseline.edge_count() + report.novel_within.size() +
                                     report.novel_between.size());
        CHECK(ga.nodes == baseline.nodes);
    }
}

TEST_CASE("window config defaults") {
    WindowConfig config;
    CHECK(config.window_years == 5);
    CHECK(config.frame_years == 5);
    CHECK(config.k == 5);
    CHECK(config.lrf == 3);
    CHECK(config.max_links == 10);
    CHECK(config.lby == -1);
    CHECK(config.min_citations == 0);
    CHECK_FALSE(config.seed.has_value());
    WindowConfig w;
    w.target_year = 2007;
    CHECK(w.baseline_window().first == 2002);
    CHECK(w.baseline_window().last == 2006);
}

TEST_CASE("window config validation names the offending field") {
    WindowConfig config;
    config.target_year = 2010;
    config.window_years = 0;
    CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("window_years"),
                         ConfigError);
    config.window_years = 5;
    config.max_links = 0;
    CHECK_THROWS_WITH_AS(config.validate(), doctest::Contains("max_links"), ConfigError);
}
