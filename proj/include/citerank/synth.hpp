#pragma once

// Deterministic synthetic-corpus generator. Citation counts are heavy-tailed
// per subject category, co-authorship is wired within SDS with occasional
// cross-SDS links, and identical (seed, config) pairs produce byte-identical
// corpora. All randomness comes from one mt19937_64 stream consumed through
// the explicit algorithms below, so no standard-library distribution
// implementation details leak into the output.

#include <cstdint>
#include <random>
#include <string_view>

#include "citerank/model.hpp"

namespace citerank {

inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

struct SynthConfig {
    std::uint64_t seed = 1;

    std::size_t n_sds = 20;
    std::size_t researchers_per_sds_min = 40;
    std::size_t researchers_per_sds_max = 160;

    // Publications per researcher: 0 with probability inactive_fraction,
    // otherwise Poisson(pubs_per_researcher_mean).
    double pubs_per_researcher_mean = 5.0;
    double inactive_fraction = 0.05;

    // Citations: 0 with the category's uncited probability (uncited_fraction
    // +- uncited_spread), otherwise a discrete power-law draw with the
    // category's tail exponent.
    double uncited_fraction = 0.30;
    double uncited_spread = 0.15;
    double tail_exponent_min = 3.3;
    double tail_exponent_max = 3.9;
    std::int64_t citation_cutoff = 1'000'000;

    // Category structure. category_pool = 0 derives max(2, 3*n_sds/2).
    std::size_t categories_per_sds = 2;
    std::size_t category_pool = 0;
    double category_scale_min = 4.0;   // log-uniform per-category citation scale
    double category_scale_max = 40.0;
    double multi_category_prob = 0.15; // publication carries a second category
    double cross_field_prob = 0.08;    // lead category or co-author drawn outside the SDS

    // Researcher heterogeneity: lognormal citation propensity (median 1).
    double researcher_sigma = 0.6;
    double coauthors_mean = 1.5;       // extra corpus authors per publication, Poisson

    int year_first = 2004;
    int year_last = 2008;
};

// Throws ConfigError for degenerate configurations (no researchers, empty
// ranges, probabilities outside bounds, tail exponent <= 1, ...).
void validate_synth_config(const SynthConfig&);

// Deterministic draw primitives over one mt19937_64 stream.
class SynthRng {
public:
    explicit SynthRng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform integer in [0, n), rejection-sampled to avoid modulo bias
    std::uint64_t below(std::uint64_t n);

    // Knuth multiplication method; suitable for the small means used here
    std::size_t poisson(double mean);

    // standard normal via Box-Muller (both uniforms consumed every call)
    double normal();

    // Discrete heavy-tail sample with P(X >= k) ~ (k/scale)^-(exponent-1):
    // inverse-transform of the floored Pareto tail, clamped to [1, cutoff].
    std::int64_t power_law(double exponent, double scale, std::int64_t cutoff);

private:
    std::mt19937_64 engine_;
};

// Generates a corpus satisfying every model invariant. Identical seed and
// config give a byte-identical corpus when serialized.
Corpus generate_corpus(const SynthConfig&);

} // namespace citerank
