#pragma once

// Standardization of a single publication's citations into each scenario's
// per-publication impact value.

#include <array>
#include <optional>
#include <string_view>

#include "citerank/baseline.hpp"
#include "citerank/model.hpp"

namespace citerank {

enum class Scenario {
    Citations,    // raw citation count
    Percentile,   // percentile rank within the (year, category) distribution
    MeanAll,      // citations / group mean over all publications
    MedianCited,  // citations / group median over cited-only publications
    MeanCited,    // citations / group mean over cited-only publications
};

inline constexpr std::array<Scenario, 5> kAllScenarios = {
    Scenario::Citations, Scenario::Percentile, Scenario::MeanAll, Scenario::MedianCited,
    Scenario::MeanCited,
};

// Reference scenario the others are compared against.
inline constexpr Scenario kDefaultBenchmark = Scenario::MeanCited;

std::string_view scenario_tag(Scenario);  // "cit", "perc", "a", "m0", "a0"
std::optional<Scenario> scenario_from_tag(std::string_view tag);
int scenario_order(Scenario);  // position within kAllScenarios

// Scaled citation count under MeanAll, MedianCited, or MeanCited: for each
// category, citations divided by that group's scaling factor, averaged over
// the publication's categories. Uncited publications score 0 regardless of
// baselines.
double aii(const Publication&, const BaselineTable&, Scenario variant);

// Percentile of the publication's citation count within each category group
// (members of a tie block share the block's best rank), averaged over the
// categories. A singleton group scores 100.
double percentile_rank(const Publication&, const BaselineTable&);

double impact_of(const Publication&, const BaselineTable&, Scenario);

} // namespace citerank
