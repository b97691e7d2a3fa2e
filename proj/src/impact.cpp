#include "citerank/impact.hpp"

#include <algorithm>
#include <functional>

#include "citerank/errors.hpp"
#include "citerank/stats.hpp"

namespace citerank {

std::string_view scenario_tag(Scenario scenario) {
    switch (scenario) {
        case Scenario::Citations: return "cit";
        case Scenario::Percentile: return "perc";
        case Scenario::MeanAll: return "a";
        case Scenario::MedianCited: return "m0";
        case Scenario::MeanCited: return "a0";
    }
    return "?";
}

std::optional<Scenario> scenario_from_tag(std::string_view tag) {
    for (Scenario s : kAllScenarios) {
        if (scenario_tag(s) == tag) return s;
    }
    return std::nullopt;
}

int scenario_order(Scenario scenario) {
    for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
        if (kAllScenarios[i] == scenario) return static_cast<int>(i);
    }
    return -1;
}

namespace {

const BaselineStats& group_for(const Publication& pub, const BaselineTable& table,
                               const std::string& category) {
    const BaselineStats* stats = table.find(pub.year, category);
    if (!stats) {
        throw InconsistentBaselineError("publication '" + pub.pub_id + "': no baseline group for year " +
                                        std::to_string(pub.year) + ", category '" + category + "'");
    }
    return *stats;
}

} // namespace

double aii(const Publication& pub, const BaselineTable& table, Scenario variant) {
    if (variant != Scenario::MeanAll && variant != Scenario::MedianCited &&
        variant != Scenario::MeanCited) {
        throw Error("aii: scenario '" + std::string(scenario_tag(variant)) +
                    "' has no scaling factor");
    }
    if (pub.categories.empty()) {
        throw ValidationError("publication '" + pub.pub_id + "' has no subject category");
    }
    if (pub.citations == 0) return 0.0;

    double sum = 0.0;
    for (const auto& category : pub.categories) {
        const BaselineStats& stats = group_for(pub, table, category);
        std::optional<double> factor;
        switch (variant) {
            case Scenario::MeanAll: factor = stats.mean_all; break;
            case Scenario::MedianCited: factor = stats.median_cited; break;
            default: factor = stats.mean_cited; break;
        }
        // A cited publication makes its own group cited, so a missing or zero
        // factor can only mean the table was not computed from this corpus.
        if (!factor || *factor <= 0.0) {
            throw InconsistentBaselineError("publication '" + pub.pub_id + "' is cited but group (" +
                                            std::to_string(pub.year) + ", '" + category +
                                            "') has no positive scaling factor");
        }
        sum += static_cast<double>(pub.citations) / *factor;
    }
    return sum / static_cast<double>(pub.categories.size());
}

double percentile_rank(const Publication& pub, const BaselineTable& table) {
    if (pub.categories.empty()) {
        throw ValidationError("publication '" + pub.pub_id + "' has no subject category");
    }
    double sum = 0.0;
    for (const auto& category : pub.categories) {
        const BaselineStats& stats = group_for(pub, table, category);
        const auto& distribution = stats.sorted_citations;
        const std::size_t n = distribution.size();
        // first position holding a value <= citations == count of strictly
        // greater values; +1 gives the tie block's best 1-based rank
        auto it = std::lower_bound(distribution.begin(), distribution.end(), pub.citations,
                                   std::greater<std::int64_t>{});
        if (it == distribution.end() || *it != pub.citations) {
            throw InconsistentBaselineError(
                "publication '" + pub.pub_id + "' with " + std::to_string(pub.citations) +
                " citations is not part of group (" + std::to_string(pub.year) + ", '" + category +
                "')");
        }
        const std::size_t best_rank = static_cast<std::size_t>(it - distribution.begin()) + 1;
        sum += stats::rank_percentile(n, best_rank);
    }
    return sum / static_cast<double>(pub.categories.size());
}

double impact_of(const Publication& pub, const BaselineTable& table, Scenario scenario) {
    switch (scenario) {
        case Scenario::Citations: return static_cast<double>(pub.citations);
        case Scenario::Percentile: return percentile_rank(pub, table);
        default: return aii(pub, table, scenario);
    }
}

} // namespace citerank
