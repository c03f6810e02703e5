#include "svakit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "svakit/errors.hpp"
#include "json.hpp"

namespace svakit {

namespace {

const std::vector<std::string> kNoCiters;

// Enforce the record invariants: normalized ids, duplicate-free references in
// first-occurrence order, no self-citation.
PaperRecord sanitize(PaperRecord rec) {
    rec.id = Corpus::normalize_id(rec.id);
    std::vector<std::string> refs;
    refs.reserve(rec.references.size());
    std::unordered_set<std::string> seen;
    for (const auto& raw : rec.references) {
        std::string ref = Corpus::normalize_id(raw);
        if (ref.empty() || ref == rec.id) continue;
        if (seen.insert(ref).second) refs.push_back(std::move(ref));
    }
    rec.references = std::move(refs);
    return rec;
}

}  // namespace

bool PaperRecord::cites(const std::string& ref_id) const {
    return std::find(references.begin(), references.end(), ref_id) != references.end();
}

std::string Corpus::normalize_id(std::string_view raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i)
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
    return out;
}

Corpus Corpus::from_records(std::vector<PaperRecord> records) {
    Corpus corpus;
    corpus.records_.reserve(records.size());
    for (auto& rec : records) {
        PaperRecord clean = sanitize(std::move(rec));
        if (clean.id.empty()) throw DataError("record with empty id");
        if (corpus.by_id_.count(clean.id))
            throw DataError("duplicate record id: " + clean.id);
        corpus.by_id_.emplace(clean.id, corpus.records_.size());
        corpus.records_.push_back(std::move(clean));
    }
    if (corpus.records_.empty()) throw DataError("empty corpus");
    corpus.build_index();
    return corpus;
}

Corpus Corpus::parse(std::istream& in, ParseReport* report) {
    ParseReport local;
    ParseReport& rep = report ? *report : local;
    std::vector<PaperRecord> records;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw DataError("malformed record at line " + std::to_string(lineno));

        PaperRecord rec;
        if (j.contains("id") && j["id"].is_string())
            rec.id = normalize_id(j["id"].get<std::string>());
        if (rec.id.empty()) {
            ++rep.rejected_records;
            rep.diagnostics.push_back("line " + std::to_string(lineno) + ": missing id");
            continue;
        }
        if (j.contains("year") && j["year"].is_number_integer()) {
            rec.year = j["year"].get<int>();
        } else {
            ++rep.rejected_records;
            rep.diagnostics.push_back("line " + std::to_string(lineno) +
                                      ": record '" + rec.id + "' missing year");
            continue;
        }
        if (j.contains("references")) {
            if (!j["references"].is_array())
                throw DataError("malformed record at line " + std::to_string(lineno) +
                                ": references is not an array");
            for (const auto& r : j["references"])
                if (r.is_string()) rec.references.push_back(r.get<std::string>());
        }
        rec = sanitize(std::move(rec));
        if (!ids.insert(rec.id).second) {
            ++rep.duplicate_records;
            rep.diagnostics.push_back("line " + std::to_string(lineno) +
                                      ": duplicate record '" + rec.id + "' ignored");
            continue;
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw DataError("empty corpus");
    return from_records(std::move(records));
}

Corpus Corpus::load(const std::string& path, ParseReport* report) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file: " + path);
    return parse(in, report);
}

void Corpus::save(std::ostream& out) const {
    for (const auto& rec : records_) {
        nlohmann::ordered_json j;
        j["id"] = rec.id;
        j["year"] = rec.year;
        j["references"] = rec.references;
        out << j.dump() << '\n';
    }
}

void Corpus::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write corpus file: " + path);
    save(out);
}

void Corpus::build_index() {
    citing_.clear();
    year_min_ = records_.front().year;
    year_max_ = records_.front().year;
    for (const auto& rec : records_) {
        year_min_ = std::min(year_min_, rec.year);
        year_max_ = std::max(year_max_, rec.year);
        for (const auto& ref : rec.references) citing_[ref].push_back(rec.id);
    }
    for (auto& [ref, citers] : citing_) std::sort(citers.begin(), citers.end());
    for (auto& rec : records_) {
        auto it = citing_.find(rec.id);
        rec.citation_count = it == citing_.end() ? 0 : static_cast<int>(it->second.size());
    }
}

const PaperRecord* Corpus::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &records_[it->second];
}

const std::vector<std::string>& Corpus::citing(const std::string& ref_id) const {
    auto it = citing_.find(ref_id);
    return it == citing_.end() ? kNoCiters : it->second;
}

int Corpus::citation_count(const std::string& ref_id) const {
    return static_cast<int>(citing(ref_id).size());
}

Corpus Corpus::expand_from_seeds(const std::vector<std::string>& seeds,
                                 int backward_steps, int forward_steps) const {
    if (backward_steps < 0 || forward_steps < 0)
        throw DataError("expansion steps must be non-negative");
    std::unordered_set<std::string> keep;
    std::vector<std::string> frontier;
    for (const auto& raw : seeds) {
        std::string id = normalize_id(raw);
        if (!find(id)) throw DataError("unknown seed id: " + id);
        if (keep.insert(id).second) frontier.push_back(id);
    }
    if (frontier.empty()) throw DataError("no seeds given");

    // Backward and forward walks are independent closures over the seed set.
    auto walk = [&](int steps, auto&& neighbors) {
        std::unordered_set<std::string> visited(frontier.begin(), frontier.end());
        std::vector<std::string> layer = frontier;
        for (int step = 0; step < steps && !layer.empty(); ++step) {
            std::vector<std::string> next;
            for (const auto& id : layer)
                for (const auto& n : neighbors(id))
                    if (find(n) && visited.insert(n).second) next.push_back(n);
            layer = std::move(next);
        }
        keep.insert(visited.begin(), visited.end());
    };
    walk(backward_steps, [&](const std::string& id) -> const std::vector<std::string>& {
        return find(id)->references;
    });
    walk(forward_steps, [&](const std::string& id) -> const std::vector<std::string>& {
        return citing(id);
    });

    std::vector<PaperRecord> sub;
    for (const auto& rec : records_)
        if (keep.count(rec.id)) sub.push_back(rec);
    return from_records(std::move(sub));
}

}  // namespace svakit
