#include "citerank/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "citerank/errors.hpp"

namespace citerank {

void validate_synth_config(const SynthConfig& config) {
    auto fail = [](const std::string& message) { throw ConfigError("synth config: " + message); };
    if (config.n_sds == 0) fail("n_sds must be at least 1");
    if (config.researchers_per_sds_min == 0) fail("researchers_per_sds_min must be at least 1");
    if (config.researchers_per_sds_min > config.researchers_per_sds_max) {
        fail("researchers_per_sds range is empty");
    }
    if (config.pubs_per_researcher_mean < 0.0) fail("pubs_per_researcher_mean must be >= 0");
    if (config.inactive_fraction < 0.0 || config.inactive_fraction >= 1.0) {
        fail("inactive_fraction must lie in [0, 1)");
    }
    if (config.uncited_fraction < 0.0 || config.uncited_fraction >= 1.0) {
        fail("uncited_fraction must lie in [0, 1)");
    }
    if (config.uncited_spread < 0.0 || config.uncited_spread > 0.5) {
        fail("uncited_spread must lie in [0, 0.5]");
    }
    if (!(config.tail_exponent_min > 1.0)) fail("tail_exponent must exceed 1");
    if (config.tail_exponent_min > config.tail_exponent_max) fail("tail_exponent range is empty");
    if (config.citation_cutoff < 1) fail("citation_cutoff must be at least 1");
    if (config.categories_per_sds == 0) fail("categories_per_sds must be at least 1");
    if (!(config.category_scale_min > 0.0) || config.category_scale_min > config.category_scale_max) {
        fail("category_scale range is invalid");
    }
    if (config.multi_category_prob < 0.0 || config.multi_category_prob > 1.0) {
        fail("multi_category_prob must lie in [0, 1]");
    }
    if (config.cross_field_prob < 0.0 || config.cross_field_prob > 1.0) {
        fail("cross_field_prob must lie in [0, 1]");
    }
    if (config.researcher_sigma < 0.0) fail("researcher_sigma must be >= 0");
    if (config.coauthors_mean < 0.0) fail("coauthors_mean must be >= 0");
    if (config.year_first > config.year_last) fail("year range is empty");
}

std::uint64_t SynthRng::below(std::uint64_t n) {
    if (n == 0) throw Error("SynthRng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::size_t SynthRng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    const double threshold = std::exp(-mean);
    std::size_t k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= uniform();
    } while (p > threshold);
    return k - 1;
}

double SynthRng::normal() {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::int64_t SynthRng::power_law(double exponent, double scale, std::int64_t cutoff) {
    const double beta = exponent - 1.0;
    if (!(beta > 0.0)) throw Error("power_law: exponent must exceed 1");
    const double u = uniform();               // 1-u in (0, 1]
    const double x = scale * std::pow(1.0 - u, -1.0 / beta);
    if (!(x < static_cast<double>(cutoff))) return cutoff;
    const auto k = static_cast<std::int64_t>(std::floor(x));
    return std::max<std::int64_t>(1, k);
}

namespace {

std::string make_id(char prefix, std::size_t index, int width) {
    const std::string digits = std::to_string(index);
    std::string out(1, prefix);
    if (digits.size() < static_cast<std::size_t>(width)) {
        out.append(static_cast<std::size_t>(width) - digits.size(), '0');
    }
    out += digits;
    return out;
}

int id_width(std::size_t count, int minimum) {
    int digits = 1;
    while (count >= 10) {
        count /= 10;
        ++digits;
    }
    return std::max(digits, minimum);
}

struct Category {
    std::string code;
    double exponent = 3.0;
    double scale = 10.0;
    double uncited = 0.3;
};

struct ResearcherDraw {
    std::size_t sds = 0;          // index
    double quality = 1.0;         // lognormal citation propensity
    double first_category_weight = 0.5;
    bool inactive = false;
};

} // namespace

Corpus generate_corpus(const SynthConfig& config) {
    validate_synth_config(config);
    SynthRng rng(config.seed);

    const std::size_t pool =
        config.category_pool ? config.category_pool
                             : std::max<std::size_t>(2, (3 * config.n_sds) / 2);
    const std::size_t cats_per_sds = std::min(config.categories_per_sds, pool);
    const int years = config.year_last - config.year_first + 1;

    // categories: exponent, scale (log-uniform), uncited share. The jitter is
    // centered so the corpus-level uncited share stays on the configured
    // fraction while the category-level rates spread around it.
    std::vector<Category> categories(pool);
    const int cat_width = id_width(pool, 3);
    std::vector<double> jitter(pool, 0.0);
    double jitter_sum = 0.0;
    for (std::size_t i = 0; i < pool; ++i) {
        jitter[i] = config.uncited_spread * (2.0 * rng.uniform() - 1.0);
        jitter_sum += jitter[i];
    }
    const double jitter_mean = jitter_sum / static_cast<double>(pool);
    for (std::size_t i = 0; i < pool; ++i) {
        Category& cat = categories[i];
        cat.code = make_id('C', i + 1, cat_width);
        cat.exponent = config.tail_exponent_min +
                       (config.tail_exponent_max - config.tail_exponent_min) * rng.uniform();
        const double log_min = std::log(config.category_scale_min);
        const double log_max = std::log(config.category_scale_max);
        cat.scale = std::exp(log_min + (log_max - log_min) * rng.uniform());
        cat.uncited = std::clamp(config.uncited_fraction + jitter[i] - jitter_mean, 0.0, 0.95);
    }

    // SDS structure: native categories, UDA grouping (5 SDSs per UDA)
    const int sds_width = id_width(config.n_sds, 2);
    const std::size_t n_uda = (config.n_sds + 4) / 5;
    const int uda_width = id_width(n_uda, 2);
    std::vector<std::vector<std::size_t>> native(config.n_sds);
    std::vector<std::string> sds_codes(config.n_sds);
    std::vector<std::string> uda_codes(config.n_sds);
    for (std::size_t s = 0; s < config.n_sds; ++s) {
        sds_codes[s] = make_id('S', s + 1, sds_width);
        uda_codes[s] = make_id('U', s / 5 + 1, uda_width);
        auto& cats = native[s];
        while (cats.size() < cats_per_sds) {
            const std::size_t pick = rng.below(pool);
            if (std::find(cats.begin(), cats.end(), pick) == cats.end()) cats.push_back(pick);
        }
    }

    Corpus corpus;
    corpus.window = YearRange{config.year_first, config.year_last};
    corpus.census_date = "synthetic";

    // pass 1: researchers
    std::vector<ResearcherDraw> draws;
    std::vector<std::pair<std::size_t, std::size_t>> sds_spans;  // [first, last) researcher index
    for (std::size_t s = 0; s < config.n_sds; ++s) {
        const std::size_t count =
            config.researchers_per_sds_min +
            rng.below(config.researchers_per_sds_max - config.researchers_per_sds_min + 1);
        const std::size_t first = draws.size();
        for (std::size_t i = 0; i < count; ++i) {
            ResearcherDraw draw;
            draw.sds = s;
            draw.quality = std::exp(config.researcher_sigma * rng.normal());
            draw.first_category_weight = 0.2 + 0.6 * rng.uniform();
            draw.inactive = rng.uniform() < config.inactive_fraction;
            draws.push_back(draw);
        }
        sds_spans.emplace_back(first, draws.size());
    }
    const int researcher_width = id_width(draws.size(), 6);
    corpus.researchers.reserve(draws.size());
    for (std::size_t i = 0; i < draws.size(); ++i) {
        corpus.researchers.push_back(Researcher{make_id('R', i + 1, researcher_width),
                                                sds_codes[draws[i].sds], uda_codes[draws[i].sds]});
    }

    // pass 2: publications, lead researcher order
    std::size_t pub_counter = 0;
    const auto estimated =
        static_cast<std::size_t>(static_cast<double>(draws.size()) *
                                 (config.pubs_per_researcher_mean + 1.0));
    corpus.publications.reserve(estimated);
    for (std::size_t lead = 0; lead < draws.size(); ++lead) {
        const ResearcherDraw& author = draws[lead];
        if (author.inactive) continue;
        const std::size_t n_pubs = rng.poisson(config.pubs_per_researcher_mean);
        for (std::size_t p = 0; p < n_pubs; ++p) {
            Publication pub;
            pub.year = config.year_first + static_cast<int>(rng.below(years));

            // lead category: native to the SDS, occasionally anywhere
            std::size_t lead_cat;
            const auto& cats = native[author.sds];
            if (rng.uniform() < config.cross_field_prob) {
                lead_cat = rng.below(pool);
            } else if (cats.size() == 1 || rng.uniform() < author.first_category_weight) {
                lead_cat = cats[0];
            } else {
                lead_cat = cats[1 + rng.below(cats.size() - 1)];
            }
            pub.categories.push_back(categories[lead_cat].code);
            if (pool > 1 && rng.uniform() < config.multi_category_prob) {
                std::size_t second;
                do {
                    second = rng.below(pool);
                } while (second == lead_cat);
                pub.categories.push_back(categories[second].code);
            }

            pub.author_ids.push_back(corpus.researchers[lead].researcher_id);
            const std::size_t extras = rng.poisson(config.coauthors_mean);
            for (std::size_t e = 0; e < extras; ++e) {
                std::size_t pick;
                if (rng.uniform() < config.cross_field_prob) {
                    pick = rng.below(draws.size());
                } else {
                    const auto [first, last] = sds_spans[author.sds];
                    pick = first + rng.below(last - first);
                }
                const std::string& id = corpus.researchers[pick].researcher_id;
                if (std::find(pub.author_ids.begin(), pub.author_ids.end(), id) ==
                    pub.author_ids.end()) {
                    pub.author_ids.push_back(id);
                }
            }

            const Category& cat = categories[lead_cat];
            if (rng.uniform() < cat.uncited) {
                pub.citations = 0;
            } else {
                // mild aging: older publications have accumulated more citations
                const double age_factor =
                    1.0 + 0.3 * static_cast<double>(config.year_last - pub.year) /
                              static_cast<double>(std::max(1, years - 1));
                pub.citations = rng.power_law(cat.exponent, cat.scale * age_factor * author.quality,
                                              config.citation_cutoff);
            }
            pub.pub_id = make_id('P', ++pub_counter, 7);
            corpus.publications.push_back(std::move(pub));
        }
    }

    validate_corpus(corpus);
    return corpus;
}

} // namespace citerank
