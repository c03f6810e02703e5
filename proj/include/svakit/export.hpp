#pragma once
#include <iosfwd>

#include "svakit/network.hpp"

namespace svakit {

// GraphML: nodes carry an "id" attribute, edges an integer "weight".
void write_graphml(std::ostream& out, const CoCitationNetwork& network);

// DOT with the weight as edge label.
void write_dot(std::ostream& out, const CoCitationNetwork& network);

// One citing paper's links over the baseline node set, each edge tagged with
// novelty = "within" | "between" | "existing".
void write_novel_links_graphml(std::ostream& out, const CoCitationNetwork& baseline,
                               const NovelLinkReport& report);
void write_novel_links_dot(std::ostream& out, const CoCitationNetwork& baseline,
                           const NovelLinkReport& report);

}  // namespace svakit
