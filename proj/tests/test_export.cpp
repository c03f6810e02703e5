#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "svakit/export.hpp"

using namespace svakit;

TEST_CASE("graphml export") {
    auto net = fixtures::net({"a&b", "c<d", "plain"},
                             {{"a&b", "c<d", 2}, {"a&b", "plain", 1}});
    std::ostringstream out;
    write_graphml(out, net);
    std::string xml = out.str();
    CHECK(xml.find("<?xml") == 0);
    CHECK(xml.find("attr.name=\"weight\"") != std::string::npos);
    CHECK(xml.find("a&amp;b") != std::string::npos);
    CHECK(xml.find("c&lt;d") != std::string::npos);
    CHECK(xml.find("<data key=\"weight\">2</data>") != std::string::npos);
    CHECK(xml.find("</graphml>") != std::string::npos);
    // No raw specials outside the header line.
    CHECK(xml.find("a&b") == std::string::npos);
}

TEST_CASE("dot export carries weights as labels and lists isolated nodes") {
    auto net = fixtures::net({"A", "B", "C"}, {{"A", "B", 3}});
    std::ostringstream out;
    write_dot(out, net);
    std::string dot = out.str();
    CHECK(dot.find("\"A\" -- \"B\" [label=3];") != std::string::npos);
    CHECK(dot.find("\"C\";") != std::string::npos);
}

TEST_CASE("novel link export tags novelty") {
    auto baseline = fixtures::two_triangles();
    std::vector<int> clusters = {0, 0, 0, 1, 1, 1};
    auto [ga, report] =
        augment(baseline, clusters, fixtures::rec("p", 2010, {"A", "B", "D"}));

    std::ostringstream out;
    write_novel_links_graphml(out, baseline, report);
    std::string xml = out.str();
    CHECK(xml.find("<data key=\"novelty\">existing</data>") != std::string::npos);
    CHECK(xml.find("<data key=\"novelty\">between</data>") != std::string::npos);
    CHECK(xml.find("attr.name=\"novelty\"") != std::string::npos);

    std::ostringstream dot;
    write_novel_links_dot(dot, baseline, report);
    CHECK(dot.str().find("novelty=between") != std::string::npos);
    CHECK(dot.str().find("novelty=existing") != std::string::npos);
}

TEST_CASE("exports are deterministic") {
    auto net = fixtures::two_triangles();
    std::ostringstream a, b;
    write_graphml(a, net);
    write_graphml(b, net);
    CHECK(a.str() == b.str());
}
