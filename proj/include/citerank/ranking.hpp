#pragma once

// Scientific Strength aggregation and per-SDS percentile rankings with
// quartile classes, per scenario.

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citerank/impact.hpp"

namespace citerank {

enum class Quartile { Q1, Q2, Q3, Q4 };

std::string_view quartile_tag(Quartile);

// Percentile-rank boundaries at 75/50/25, boundary membership favoring the
// better class.
Quartile quartile_of(double percentile_rank);

struct ScoredResearcher {
    std::string researcher_id;
    double ss = 0.0;
};

struct RankingEntry {
    std::string researcher_id;
    double ss = 0.0;
    double percentile_rank = 0.0;
    Quartile quartile = Quartile::Q4;
};

// Sum of the researcher's per-publication impact values over the window.
// A publication co-authored by k corpus researchers contributes its full
// value to each of them.
double scientific_strength(const std::string& researcher_id, const Corpus&, const AuthorIndex&,
                           const BaselineTable&, Scenario);

// Core ranking step: drops zero scores, orders by descending score
// (researcher_id breaks exact ties deterministically), assigns best-rank
// percentiles and quartile classes.
std::vector<RankingEntry> rank_scored(std::vector<ScoredResearcher> scored);

std::vector<RankingEntry> rank_sds(const Corpus&, const AuthorIndex&, const BaselineTable&,
                                   std::string_view sds, Scenario);

class RankingTable {
public:
    // sds ascending, then scenario in canonical order
    using Map = std::map<std::pair<std::string, int>, std::vector<RankingEntry>>;

    void insert(const std::string& sds, Scenario, std::vector<RankingEntry> entries);
    const std::vector<RankingEntry>* find(std::string_view sds, Scenario) const noexcept;

    std::vector<std::string> sds_codes() const;
    const std::vector<Scenario>& scenarios() const noexcept { return scenarios_; }

    std::size_t size() const noexcept { return lists_.size(); }
    bool empty() const noexcept { return lists_.empty(); }
    Map::const_iterator begin() const noexcept { return lists_.begin(); }
    Map::const_iterator end() const noexcept { return lists_.end(); }

private:
    Map lists_;
    std::vector<Scenario> scenarios_;  // canonical order, unique
};

// One ranking list per retained SDS and requested scenario.
RankingTable rank_all(const Corpus&, const BaselineTable&, std::span<const Scenario> scenarios);

// Delimited export: sds,scenario,researcher_id,ss,percentile_rank,quartile
// (ss at 6 decimals, percentile at 2).
void write_rankings(const RankingTable&, std::ostream&, char delimiter = ',');

} // namespace citerank
