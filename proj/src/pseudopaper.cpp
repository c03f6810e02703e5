#include "svakit/pseudopaper.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "svakit/errors.hpp"

namespace svakit {

namespace {

std::string join_ids(const std::vector<std::string>& ids, std::size_t count) {
    std::string out = "Ps(";
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += "+";
        out += ids[i];
    }
    out += ")";
    return out;
}

// Consolidate `earlier` and `later` into one record `pseudo_id` placed in the
// later year. Citation handling per remaining record:
//   - citations to the earlier seed from the earlier seed's own year are
//     removed without replacement (the pseudopaper is not placed there);
//     when both seeds share a year the rewrite rule wins instead;
//   - citations to either seed from the placement year are rewritten;
//   - every other citation to a seed is rewritten in default mode and left
//     untouched in strict mode.
void fold_pair(std::vector<PaperRecord>& records, const std::string& earlier_id,
               int earlier_year, const std::string& later_id, int later_year,
               const std::string& pseudo_id, bool strict) {
    PaperRecord pseudo;
    pseudo.id = pseudo_id;
    pseudo.year = later_year;

    std::vector<PaperRecord> out;
    out.reserve(records.size() - 1);
    std::vector<std::string> later_refs;
    for (auto& rec : records) {
        if (rec.id == earlier_id) {
            pseudo.references.insert(pseudo.references.end(), rec.references.begin(),
                                     rec.references.end());
            continue;
        }
        if (rec.id == later_id) {
            later_refs = rec.references;
            continue;
        }
        bool touches = rec.cites(earlier_id) || rec.cites(later_id);
        if (touches) {
            std::vector<std::string> rewritten;
            rewritten.reserve(rec.references.size());
            std::unordered_set<std::string> seen;
            auto push = [&](const std::string& ref) {
                if (ref != rec.id && seen.insert(ref).second) rewritten.push_back(ref);
            };
            for (const auto& ref : rec.references) {
                if (ref == earlier_id) {
                    if (rec.year == earlier_year && earlier_year != later_year)
                        continue;  // removed without replacement
                    if (!strict || rec.year == later_year)
                        push(pseudo_id);
                    else
                        push(ref);
                } else if (ref == later_id) {
                    if (!strict || rec.year == later_year)
                        push(pseudo_id);
                    else
                        push(ref);
                } else {
                    push(ref);
                }
            }
            rec.references = std::move(rewritten);
        }
        out.push_back(std::move(rec));
    }
    pseudo.references.insert(pseudo.references.end(), later_refs.begin(), later_refs.end());

    // Deduplicated union; the consolidated seeds themselves are not citable.
    std::vector<std::string> unioned;
    std::unordered_set<std::string> seen;
    for (const auto& ref : pseudo.references)
        if (ref != earlier_id && ref != later_id && ref != pseudo_id &&
            seen.insert(ref).second)
            unioned.push_back(ref);
    pseudo.references = std::move(unioned);

    out.push_back(std::move(pseudo));
    records = std::move(out);
}

}  // namespace

PseudopaperPlan plan_pseudopaper(const Corpus& corpus, const PseudopaperSpec& spec) {
    if (spec.seed_ids.size() < 2)
        throw ConfigError("pseudopaper needs at least two seed ids");
    PseudopaperPlan plan;
    std::unordered_set<std::string> seen;
    for (const auto& raw : spec.seed_ids) {
        std::string id = Corpus::normalize_id(raw);
        if (!seen.insert(id).second) throw ConfigError("degenerate pseudopaper");
        if (!corpus.find(id)) throw DataError("unknown seed id: " + id);
        plan.ordered_seeds.push_back(std::move(id));
    }
    std::stable_sort(plan.ordered_seeds.begin(), plan.ordered_seeds.end(),
                     [&](const std::string& a, const std::string& b) {
                         return corpus.find(a)->year < corpus.find(b)->year;
                     });
    plan.pseudo_id = join_ids(plan.ordered_seeds, plan.ordered_seeds.size());
    plan.placement_year = corpus.find(plan.ordered_seeds.back())->year;
    if (corpus.find(Corpus::normalize_id(plan.pseudo_id)))
        throw DataError("pseudopaper id collides with an existing record: " +
                        plan.pseudo_id);
    return plan;
}

Corpus synthesize(const Corpus& corpus, const PseudopaperSpec& spec) {
    PseudopaperPlan plan = plan_pseudopaper(corpus, spec);
    std::vector<PaperRecord> records = corpus.records();

    std::string current_id = plan.ordered_seeds.front();
    int current_year = corpus.find(current_id)->year;
    for (std::size_t i = 1; i < plan.ordered_seeds.size(); ++i) {
        const std::string& next_id = plan.ordered_seeds[i];
        int next_year = corpus.find(next_id)->year;
        std::string stage_id = join_ids(plan.ordered_seeds, i + 1);
        for (const auto& rec : records)
            if (rec.id == Corpus::normalize_id(stage_id))
                throw DataError("pseudopaper id collides with an existing record: " +
                                stage_id);
        fold_pair(records, current_id, current_year, next_id, next_year, stage_id,
                  spec.strict_window);
        current_id = stage_id;
        current_year = next_year;
    }
    return Corpus::from_records(std::move(records));
}

SvaScores score_pseudopaper(const Corpus& corpus, const PseudopaperSpec& spec,
                            WindowConfig config, const SmoothingConfig& smoothing,
                            std::vector<SvaScores>* cohort_out) {
    PseudopaperPlan plan = plan_pseudopaper(corpus, spec);
    if (config.target_year == 0) config.target_year = plan.placement_year;
    if (config.target_year != plan.placement_year)
        throw ConfigError("target_year must equal the pseudopaper placement year " +
                          std::to_string(plan.placement_year));

    Corpus transformed = synthesize(corpus, spec);
    std::vector<SvaScores> cohort = score_cohort(transformed, config, smoothing);
    std::string pseudo_id = Corpus::normalize_id(plan.pseudo_id);
    const SvaScores* found = nullptr;
    for (const auto& s : cohort)
        if (s.paper_id == pseudo_id) found = &s;
    if (!found) throw DataError("pseudopaper has no references to score");
    SvaScores result = *found;
    if (cohort_out) *cohort_out = std::move(cohort);
    return result;
}

}  // namespace svakit
