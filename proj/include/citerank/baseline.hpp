#pragma once

// Per-(year, subject category) citation distribution statistics that serve
// as scaling factors: the mean over all publications of the group, the mean
// and median over the cited-only ones, and the full sorted distribution for
// percentile ranks.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/model.hpp"

namespace citerank {

struct BaselineStats {
    int year = 0;
    std::string category;
    std::size_t n_total = 0;
    std::size_t n_cited = 0;                     // citations > 0
    double mean_all = 0.0;                       // zero when the group is all-uncited
    std::optional<double> mean_cited;            // absent when n_cited == 0
    std::optional<double> median_cited;          // absent when n_cited == 0
    std::vector<std::int64_t> sorted_citations;  // descending, n_total entries
};

class BaselineTable {
public:
    using Key = std::pair<int, std::string>;
    using Map = std::map<Key, BaselineStats>;

    // Replaces any existing group with the same (year, category).
    void insert(BaselineStats stats);

    const BaselineStats* find(int year, std::string_view category) const noexcept;

    // Throws MissingGroupError so a caller cannot silently misprice a
    // publication against an absent group.
    const BaselineStats& at(int year, std::string_view category) const;

    std::size_t size() const noexcept { return groups_.size(); }
    bool empty() const noexcept { return groups_.empty(); }
    Map::const_iterator begin() const noexcept { return groups_.begin(); }
    Map::const_iterator end() const noexcept { return groups_.end(); }

private:
    Map groups_;
};

// One group per (year, category) pair occurring in the corpus. A publication
// with k categories contributes its citation count once to each of its k
// groups. The median of an even-sized cited set is the mean of the two
// middle values.
BaselineTable compute_baselines(const Corpus&);

// Delimited export: year,category,n_total,n_cited,a,a0,m0 with 6-decimal
// fixed formatting; absent statistics become empty cells.
void write_baselines(const BaselineTable&, std::ostream&, char delimiter = ',');

} // namespace citerank
