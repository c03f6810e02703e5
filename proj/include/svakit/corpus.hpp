#pragma once
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace svakit {

// One citing publication. References are duplicate-free, keep first-occurrence
// order, and never contain the record's own id.
struct PaperRecord {
    std::string id;
    int year = 0;
    std::vector<std::string> references;
    int citation_count = 0;  // times cited within the corpus; derived, not ingested

    int reference_count() const { return static_cast<int>(references.size()); }
    bool cites(const std::string& ref_id) const;

    friend bool operator==(const PaperRecord& a, const PaperRecord& b) {
        return a.id == b.id && a.year == b.year && a.references == b.references;
    }
};

struct ParseReport {
    std::size_t duplicate_records = 0;  // repeated ids, first occurrence wins
    std::size_t rejected_records = 0;   // records missing id or year
    std::vector<std::string> diagnostics;
};

// Immutable after construction; safe for concurrent reads.
class Corpus {
public:
    Corpus() = default;

    // Throws DataError on duplicate ids or an empty record set.
    static Corpus from_records(std::vector<PaperRecord> records);

    // Line-delimited JSON, one record per line: {"id", "year", "references"}.
    // Unknown fields are ignored. Duplicate ids collapse to the first occurrence.
    static Corpus parse(std::istream& in, ParseReport* report = nullptr);
    static Corpus load(const std::string& path, ParseReport* report = nullptr);
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;

    const std::vector<PaperRecord>& records() const { return records_; }
    const PaperRecord* find(const std::string& id) const;
    // Ids of the records citing ref_id, sorted ascending; empty if none.
    const std::vector<std::string>& citing(const std::string& ref_id) const;
    int citation_count(const std::string& ref_id) const;
    int year_min() const { return year_min_; }
    int year_max() const { return year_max_; }
    std::size_t size() const { return records_.size(); }

    // Seeds plus everything within backward_steps hops along references and
    // forward_steps hops along the citing index, both walked from the seeds.
    Corpus expand_from_seeds(const std::vector<std::string>& seeds,
                             int backward_steps, int forward_steps) const;

    friend bool operator==(const Corpus& a, const Corpus& b) {
        return a.records_ == b.records_;
    }

    // Trim surrounding whitespace and lowercase; identifiers are otherwise opaque.
    static std::string normalize_id(std::string_view raw);

private:
    void build_index();

    std::vector<PaperRecord> records_;  // insertion order
    std::unordered_map<std::string, std::size_t> by_id_;
    std::map<std::string, std::vector<std::string>> citing_;
    int year_min_ = 0;
    int year_max_ = 0;
};

}  // namespace svakit
