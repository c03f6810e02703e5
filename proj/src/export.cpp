#include "svakit/export.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace svakit {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

struct TaggedEdge {
    std::pair<int, int> pair;
    int weight;
    const char* novelty;
};

std::vector<TaggedEdge> collect_report_edges(const CoCitationNetwork& baseline,
                                             const NovelLinkReport& report) {
    std::vector<TaggedEdge> edges;
    for (const auto& p : report.existing_links)
        edges.push_back({p, baseline.weight(p.first, p.second), "existing"});
    for (const auto& p : report.novel_within) edges.push_back({p, 1, "within"});
    for (const auto& p : report.novel_between) edges.push_back({p, 1, "between"});
    std::sort(edges.begin(), edges.end(),
              [](const TaggedEdge& a, const TaggedEdge& b) { return a.pair < b.pair; });
    return edges;
}

}  // namespace

void write_graphml(std::ostream& out, const CoCitationNetwork& network) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
        << "  <graph id=\"" << xml_escape(network.provenance)
        << "\" edgedefault=\"undirected\">\n";
    for (const auto& id : network.nodes)
        out << "    <node id=\"" << xml_escape(id) << "\"/>\n";
    for (const auto& [pair, w] : network.edges)
        out << "    <edge source=\"" << xml_escape(network.nodes[pair.first])
            << "\" target=\"" << xml_escape(network.nodes[pair.second])
            << "\"><data key=\"weight\">" << w << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const CoCitationNetwork& network) {
    out << "graph " << dot_escape(network.provenance) << " {\n";
    std::set<int> connected;
    for (const auto& [pair, w] : network.edges) {
        connected.insert(pair.first);
        connected.insert(pair.second);
    }
    for (std::size_t i = 0; i < network.nodes.size(); ++i)
        if (!connected.count(static_cast<int>(i)))
            out << "  " << dot_escape(network.nodes[i]) << ";\n";
    for (const auto& [pair, w] : network.edges)
        out << "  " << dot_escape(network.nodes[pair.first]) << " -- "
            << dot_escape(network.nodes[pair.second]) << " [label=" << w << "];\n";
    out << "}\n";
}

void write_novel_links_graphml(std::ostream& out, const CoCitationNetwork& baseline,
                               const NovelLinkReport& report) {
    auto edges = collect_report_edges(baseline, report);
    std::set<int> used;
    for (const auto& e : edges) {
        used.insert(e.pair.first);
        used.insert(e.pair.second);
    }
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n"
        << "  <key id=\"novelty\" for=\"edge\" attr.name=\"novelty\" attr.type=\"string\"/>\n"
        << "  <graph id=\"" << xml_escape(report.paper_id)
        << "\" edgedefault=\"undirected\">\n";
    for (int i : used)
        out << "    <node id=\"" << xml_escape(baseline.nodes[i]) << "\"/>\n";
    for (const auto& e : edges)
        out << "    <edge source=\"" << xml_escape(baseline.nodes[e.pair.first])
            << "\" target=\"" << xml_escape(baseline.nodes[e.pair.second])
            << "\"><data key=\"weight\">" << e.weight
            << "</data><data key=\"novelty\">" << e.novelty << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_novel_links_dot(std::ostream& out, const CoCitationNetwork& baseline,
                           const NovelLinkReport& report) {
    auto edges = collect_report_edges(baseline, report);
    out << "graph " << dot_escape(report.paper_id) << " {\n";
    for (const auto& e : edges)
        out << "  " << dot_escape(baseline.nodes[e.pair.first]) << " -- "
            << dot_escape(baseline.nodes[e.pair.second]) << " [label=" << e.weight
            << ", novelty=" << e.novelty << "];\n";
    out << "}\n";
}

}  // namespace svakit
