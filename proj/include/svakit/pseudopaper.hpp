#pragma once
#include <string>
#include <vector>

#include "svakit/corpus.hpp"
#include "svakit/metrics.hpp"

namespace svakit {

// Directive to consolidate two or more target papers into one artificial
// record. Seeds are processed in ascending year order (stable on input order);
// by default every surviving citation to a seed is redirected to the
// pseudopaper except citations from an earlier seed's own year, which are
// removed without replacement. Strict mode touches only the seed years.
struct PseudopaperSpec {
    std::vector<std::string> seed_ids;
    bool strict_window = false;
};

// Resolved synthesis parameters.
struct PseudopaperPlan {
    std::vector<std::string> ordered_seeds;  // ascending year
    std::string pseudo_id;                   // "Ps(id1+id2+...)"
    int placement_year = 0;                  // latest seed year
};

// Validates seeds against the corpus: they exist, are distinct, and the
// pseudo id does not collide. Throws DataError otherwise.
PseudopaperPlan plan_pseudopaper(const Corpus& corpus, const PseudopaperSpec& spec);

// Pure transformation: returns a new corpus in which the seeds are replaced by
// one pseudopaper citing the deduplicated union of their references, placed in
// the latest seed year. The input corpus is never modified.
Corpus synthesize(const Corpus& corpus, const PseudopaperSpec& spec);

// Synthesizes, scores the placement-year cohort of the transformed corpus, and
// returns the pseudopaper's scores (ranks taken within that cohort). The full
// cohort is copied to cohort_out when provided. config.target_year must equal
// the placement year (0 means derive it).
SvaScores score_pseudopaper(const Corpus& corpus, const PseudopaperSpec& spec,
                            WindowConfig config, const SmoothingConfig& smoothing = {},
                            std::vector<SvaScores>* cohort_out = nullptr);

}  // namespace svakit
