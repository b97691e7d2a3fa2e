#pragma once

// Divergence of each scenario's rankings from the benchmark: per-SDS
// Spearman correlations, per-UDA descriptive statistics of those
// correlations, and quartile/top/bottom shift percentages.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citerank/ranking.hpp"

namespace citerank {

// Tie-corrected Spearman coefficient: ties receive mid (average) ranks, then
// the Pearson correlation of the two rank vectors is returned, clamped to
// [-1, 1]. Throws UndefinedCorrelationError for fewer than two pairs or when
// either rank vector has zero variance.
double spearman(std::span<const double> xs, std::span<const double> ys);

struct SdsCorrelation {
    std::string sds;
    std::string uda;
    Scenario scenario = kDefaultBenchmark;
    std::size_t n = 0;          // researchers ranked under both scenario and benchmark
    std::optional<double> rho;  // absent when the coefficient is undefined
};

struct UdaStats {
    std::string uda;
    Scenario scenario = kDefaultBenchmark;
    std::size_t n_sds = 0;  // member SDSs with a defined coefficient
    double mean = 0.0;
    double sd = 0.0;  // sample standard deviation, n-1 denominator
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

enum class Extreme { Top, Bottom };

struct ShiftRow {
    std::string uda;        // the total row carries is_total instead of a code
    bool is_total = false;
    Scenario scenario = kDefaultBenchmark;
    std::size_t n = 0;      // denominator; 0 flags an empty class
    std::size_t moved = 0;
    double pct = 0.0;       // 100 * moved / n, 0 when n == 0
};

// One row per SDS x scenario (scenario set taken from the table, benchmark
// included). Correlations are computed on the ss scores of the researchers
// ranked under both scenario and benchmark.
std::vector<SdsCorrelation> sds_correlations(const RankingTable&, Scenario benchmark,
                                             const Taxonomy&);

// Mean / sd / median / min / max of the defined coefficients per UDA and
// scenario. UDAs with no defined coefficient for a scenario are omitted.
std::vector<UdaStats> uda_descriptives(const std::vector<SdsCorrelation>&);

// Percentage of researchers (ranked under both scenario and benchmark) whose
// quartile class differs from the benchmark's, per UDA plus an all-UDA total.
std::vector<ShiftRow> quartile_shift(const RankingTable&, Scenario scenario, Scenario benchmark,
                                     const Taxonomy&);

// Top: among benchmark-Q1 researchers, the percentage not Q1 under the
// scenario (researchers unranked there count as lost). Bottom: same for Q4.
std::vector<ShiftRow> extreme_shift(const RankingTable&, Scenario scenario, Scenario benchmark,
                                    Extreme which, const Taxonomy&);

struct RunMetadata {
    std::string tool;
    std::string version;
    Scenario benchmark = kDefaultBenchmark;
    std::vector<Scenario> scenarios;
    double sds_threshold = 0.5;
    std::optional<std::uint64_t> seed;   // set when the corpus was generated
    std::string rng_algorithm;           // set when the corpus was generated
    std::string census_date;
    std::string config_digest;
    YearRange window{};
    std::vector<std::string> excluded_sds;
    std::size_t n_publications = 0;
    std::size_t n_researchers = 0;
    std::size_t n_sds = 0;
    std::size_t n_uda = 0;
    // documented conventions, embedded so consumers need not guess
    std::string tie_rule = "best-rank";
    std::string spearman_ties = "midrank";
    std::string nil_ss = "excluded";
};

struct SensitivityReport {
    RunMetadata meta;
    std::vector<SdsCorrelation> correlations;
    std::vector<UdaStats> uda_stats;
    std::vector<ShiftRow> quartile_changes;
    std::vector<ShiftRow> top_losses;
    std::vector<ShiftRow> bottom_losses;
};

// Runs every sensitivity measure for each scenario present in the ranking
// table against the benchmark. Metadata fields describing the run context
// (seed, digest, census date) are left for the caller to fill.
SensitivityReport build_sensitivity(const Corpus& ranked_corpus, const RankingTable&,
                                    Scenario benchmark);

} // namespace citerank
