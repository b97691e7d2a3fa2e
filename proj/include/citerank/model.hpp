#pragma once

// Corpus domain types, delimited-file ingestion, and the SDS coverage filter
// that defines the analyzable population.
//
// File formats (header row, configurable delimiter, ';' between values of a
// multi-valued cell, UTF-8):
//   publications: pub_id,year,citations,categories,author_ids
//   researchers:  researcher_id,sds,uda

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace citerank {

struct Publication {
    std::string pub_id;
    int year = 0;
    std::int64_t citations = 0;           // count at census, never negative
    std::vector<std::string> categories;  // non-empty; duplicates removed, input order kept
    std::vector<std::string> author_ids;  // non-empty; only researchers present in the corpus
};

struct Researcher {
    std::string researcher_id;
    std::string sds;  // field code, e.g. "AGR/10"
    std::string uda;  // discipline code grouping several SDSs
};

struct YearRange {
    int first = 0;
    int last = 0;
    bool contains(int year) const noexcept { return year >= first && year <= last; }
    bool operator==(const YearRange&) const = default;
};

// Immutable after load; safe to share read-only across parallel workers.
struct Corpus {
    std::vector<Publication> publications;
    std::vector<Researcher> researchers;
    YearRange window{};
    std::string census_date;  // informational only
};

struct LoadOptions {
    char delimiter = ',';
    std::optional<YearRange> window;  // derived from the data when absent
    std::string census_date;
};

Corpus load_corpus(std::istream& publications, std::string publications_name,
                   std::istream& researchers, std::string researchers_name,
                   const LoadOptions& options = {});
Corpus load_corpus_files(const std::filesystem::path& publications,
                         const std::filesystem::path& researchers,
                         const LoadOptions& options = {});

void save_corpus(const Corpus&, std::ostream& publications, std::ostream& researchers,
                 char delimiter = ',');
void save_corpus_files(const Corpus&, const std::filesystem::path& publications,
                       const std::filesystem::path& researchers, char delimiter = ',');

// Re-checks every corpus invariant on an in-memory corpus; throws
// ValidationError at the first breach. An empty corpus is valid.
void validate_corpus(const Corpus&);

// researcher_id -> indices into corpus.publications, ascending.
using AuthorIndex = std::unordered_map<std::string, std::vector<std::size_t>>;
AuthorIndex build_author_index(const Corpus&);

// sds -> uda (functional by invariant).
using Taxonomy = std::map<std::string, std::string>;
Taxonomy sds_taxonomy(const Corpus&);

struct FilterResult {
    Corpus corpus;
    std::vector<std::string> excluded_sds;  // sorted
};

// Keeps only researchers of SDSs where at least `threshold` of the members
// have one or more publications in the window. Author lists are pruned to
// the retained researchers; publications left with no author are dropped.
// threshold must lie in (0, 1].
FilterResult filter_sds(const Corpus&, double threshold = 0.5);

} // namespace citerank
