#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "svakit/analytics.hpp"
#include "svakit/corpus.hpp"
#include "svakit/errors.hpp"
#include "svakit/export.hpp"
#include "svakit/metrics.hpp"
#include "svakit/network.hpp"
#include "svakit/pseudopaper.hpp"

namespace py = pybind11;
using namespace svakit;

namespace {

std::vector<std::tuple<std::string, std::string, int>> edge_list(
    const CoCitationNetwork& net) {
    std::vector<std::tuple<std::string, std::string, int>> out;
    out.reserve(net.edges.size());
    for (const auto& [pair, w] : net.edges)
        out.emplace_back(net.nodes[pair.first], net.nodes[pair.second], w);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Co-citation network construction and structural variation scoring";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);

    py::class_<PaperRecord>(m, "PaperRecord")
        .def(py::init([](std::string id, int year, std::vector<std::string> refs) {
                 PaperRecord r;
                 r.id = std::move(id);
                 r.year = year;
                 r.references = std::move(refs);
                 return r;
             }),
             py::arg("id"), py::arg("year"), py::arg("references") = std::vector<std::string>{})
        .def_readonly("id", &PaperRecord::id)
        .def_readonly("year", &PaperRecord::year)
        .def_readonly("references", &PaperRecord::references)
        .def_readonly("citation_count", &PaperRecord::citation_count)
        .def("__repr__", [](const PaperRecord& r) {
            return "PaperRecord(" + r.id + ", " + std::to_string(r.year) + ", " +
                   std::to_string(r.references.size()) + " refs)";
        });

    py::class_<Corpus>(m, "Corpus")
        .def_static("from_records", &Corpus::from_records, py::arg("records"))
        .def_static(
            "parse",
            [](const std::string& text) {
                std::istringstream in(text);
                return Corpus::parse(in);
            },
            py::arg("text"))
        .def_static(
            "load", [](const std::string& path) { return Corpus::load(path); },
            py::arg("path"))
        .def("save",
             [](const Corpus& c) {
                 std::ostringstream out;
                 c.save(out);
                 return out.str();
             })
        .def("save_file", &Corpus::save_file, py::arg("path"))
        .def("records", &Corpus::records)
        .def("find", &Corpus::find, py::arg("id"), py::return_value_policy::reference_internal)
        .def("citing", &Corpus::citing, py::arg("ref_id"))
        .def("citation_count", &Corpus::citation_count, py::arg("ref_id"))
        .def("expand_from_seeds", &Corpus::expand_from_seeds, py::arg("seeds"),
             py::arg("backward_steps"), py::arg("forward_steps"))
        .def_property_readonly("year_min", &Corpus::year_min)
        .def_property_readonly("year_max", &Corpus::year_max)
        .def("__len__", &Corpus::size);

    py::class_<WindowConfig>(m, "WindowConfig")
        .def(py::init<>())
        .def_readwrite("target_year", &WindowConfig::target_year)
        .def_readwrite("window_years", &WindowConfig::window_years)
        .def_readwrite("frame_years", &WindowConfig::frame_years)
        .def_readwrite("k", &WindowConfig::k)
        .def_readwrite("lrf", &WindowConfig::lrf)
        .def_readwrite("max_links", &WindowConfig::max_links)
        .def_readwrite("lby", &WindowConfig::lby)
        .def_readwrite("min_citations", &WindowConfig::min_citations)
        .def_readwrite("seed", &WindowConfig::seed);

    py::class_<SmoothingConfig>(m, "SmoothingConfig")
        .def(py::init<>())
        .def_readwrite("epsilon", &SmoothingConfig::epsilon);

    py::class_<CoCitationNetwork>(m, "CoCitationNetwork")
        .def_readonly("nodes", &CoCitationNetwork::nodes)
        .def_readonly("provenance", &CoCitationNetwork::provenance)
        .def("edges", &edge_list)
        .def("node_count", &CoCitationNetwork::node_count)
        .def("edge_count", &CoCitationNetwork::edge_count)
        .def("weight",
             [](const CoCitationNetwork& net, const std::string& a, const std::string& b) {
                 auto ia = net.index_of(a);
                 auto ib = net.index_of(b);
                 if (!ia || !ib) return 0;
                 return net.weight(*ia, *ib);
             })
        .def("to_graphml",
             [](const CoCitationNetwork& net) {
                 std::ostringstream out;
                 write_graphml(out, net);
                 return out.str();
             })
        .def("to_dot", [](const CoCitationNetwork& net) {
            std::ostringstream out;
            write_dot(out, net);
            return out.str();
        });

    py::class_<Partition>(m, "Partition")
        .def_readonly("assignment", &Partition::assignment)
        .def_readonly("cluster_count", &Partition::cluster_count)
        .def_readonly("q", &Partition::q)
        .def_readonly("edgeless", &Partition::edgeless);

    py::class_<NovelLinkReport>(m, "NovelLinkReport")
        .def_readonly("paper_id", &NovelLinkReport::paper_id)
        .def_readonly("novel_within", &NovelLinkReport::novel_within)
        .def_readonly("novel_between", &NovelLinkReport::novel_between)
        .def_readonly("existing_links", &NovelLinkReport::existing_links)
        .def_readonly("boundary_refs", &NovelLinkReport::boundary_refs)
        .def_readonly("total_refs", &NovelLinkReport::total_refs)
        .def_readonly("dropped_pairs", &NovelLinkReport::dropped_pairs);

    py::class_<SvaScores>(m, "SvaScores")
        .def_readonly("paper_id", &SvaScores::paper_id)
        .def_readonly("citation_count", &SvaScores::citation_count)
        .def_readonly("delta_m", &SvaScores::delta_m)
        .def_readonly("cl", &SvaScores::cl)
        .def_readonly("c_kl", &SvaScores::c_kl)
        .def_readonly("h", &SvaScores::h)
        .def_readonly("alpha", &SvaScores::alpha)
        .def_readonly("beta", &SvaScores::beta)
        .def_readonly("entropy", &SvaScores::entropy)
        .def_readonly("rank_delta_m", &SvaScores::rank_delta_m)
        .def_readonly("rank_cl", &SvaScores::rank_cl)
        .def_readonly("rank_c_kl", &SvaScores::rank_c_kl)
        .def_readonly("rank_h", &SvaScores::rank_h)
        .def_readonly("rank_alpha", &SvaScores::rank_alpha)
        .def_readonly("rank_beta", &SvaScores::rank_beta)
        .def_readonly("rank_entropy", &SvaScores::rank_entropy)
        .def_readonly("novel_within_count", &SvaScores::novel_within_count)
        .def_readonly("novel_between_count", &SvaScores::novel_between_count)
        .def_readonly("existing_count", &SvaScores::existing_count)
        .def("__repr__", [](const SvaScores& s) {
            return "SvaScores(" + s.paper_id + ")";
        });

    py::class_<PseudopaperSpec>(m, "PseudopaperSpec")
        .def(py::init([](std::vector<std::string> seeds, bool strict) {
                 return PseudopaperSpec{std::move(seeds), strict};
             }),
             py::arg("seed_ids"), py::arg("strict_window") = false)
        .def_readwrite("seed_ids", &PseudopaperSpec::seed_ids)
        .def_readwrite("strict_window", &PseudopaperSpec::strict_window);

    m.def("select_nodes",
          [](const Corpus& corpus, int first, int last, int k, int min_citations) {
              return select_nodes(corpus, YearWindow{first, last}, k, min_citations);
          },
          py::arg("corpus"), py::arg("first_year"), py::arg("last_year"),
          py::arg("k") = 5, py::arg("min_citations") = 0);
    m.def("build_cocitation",
          [](const Corpus& corpus, int first, int last,
             const std::vector<std::string>& nodes, int lrf, int max_links, int lby) {
              return build_cocitation(corpus, YearWindow{first, last}, nodes, lrf,
                                      max_links, lby);
          },
          py::arg("corpus"), py::arg("first_year"), py::arg("last_year"),
          py::arg("nodes"), py::arg("lrf") = 3, py::arg("max_links") = 10,
          py::arg("lby") = -1);
    m.def("modularity", &modularity, py::arg("network"), py::arg("assignment"));
    m.def("louvain", &louvain, py::arg("network"),
          py::arg("seed") = std::optional<std::uint64_t>{});
    m.def("betweenness", &betweenness, py::arg("network"));
    m.def("augment", &augment, py::arg("baseline"), py::arg("assignment"),
          py::arg("paper"));
    m.def("harmonic", &harmonic, py::arg("delta_m"), py::arg("cl"), py::arg("c_kl"));
    m.def("entropy",
          [](const PaperRecord& paper, const std::vector<int>& assignment,
             const CoCitationNetwork& net) { return entropy(paper, assignment, net); },
          py::arg("paper"), py::arg("assignment"), py::arg("network"));
    m.def("score_cohort",
          [](const Corpus& corpus, const WindowConfig& config,
             const SmoothingConfig& smoothing,
             std::optional<std::vector<std::string>> targets) {
              return score_cohort(corpus, config, smoothing,
                                  targets ? &*targets : nullptr);
          },
          py::arg("corpus"), py::arg("config"),
          py::arg("smoothing") = SmoothingConfig{},
          py::arg("targets") = std::optional<std::vector<std::string>>{});
    m.def("synthesize", &synthesize, py::arg("corpus"), py::arg("spec"));
    m.def("score_pseudopaper",
          [](const Corpus& corpus, const PseudopaperSpec& spec, WindowConfig config,
             const SmoothingConfig& smoothing) {
              return score_pseudopaper(corpus, spec, config, smoothing);
          },
          py::arg("corpus"), py::arg("spec"), py::arg("config"),
          py::arg("smoothing") = SmoothingConfig{});
}
