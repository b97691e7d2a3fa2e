#include <doctest.h>

#include <array>
#include <map>
#include <sstream>

#include "citerank/ranking.hpp"
#include "citerank/synth.hpp"
#include "testutil.hpp"

using namespace citerank;

namespace {

// Percentile ranks of the benchmark column for the 17-researcher reference
// field, descending.
constexpr std::array<double, 17> kReferencePercentiles = {
    100.00, 93.75, 87.50, 87.50, 75.00, 68.75, 62.50, 56.25, 50.00,
    50.00,  37.50, 31.25, 25.00, 18.75, 12.50, 6.25,  6.25,
};

std::vector<ScoredResearcher> scored_from(const std::vector<double>& values) {
    std::vector<ScoredResearcher> scored;
    for (std::size_t i = 0; i < values.size(); ++i) {
        scored.push_back({"r" + std::to_string(i + 1), values[i]});
    }
    return scored;
}

} // namespace

TEST_SUITE("ranking") {

TEST_CASE("scientific strength sums per-publication impact") {
    auto corpus = testutil::make_corpus(
        {{"r1", "S1", "U1"}, {"r2", "S1", "U1"}},
        {{"p1", 2004, 3, {"C"}, {"r1"}},   // a0 = 2 -> 1.5
         {"p2", 2004, 5, {"C"}, {"r1"}},   // a0 = 2 ... see fixture below
         {"p3", 2004, 0, {"C"}, {"r2"}}});
    BaselineTable table;
    BaselineStats stats;
    stats.year = 2004;
    stats.category = "C";
    stats.n_total = 3;
    stats.n_cited = 2;
    stats.mean_all = 8.0 / 3.0;
    stats.mean_cited = 2.0;
    stats.median_cited = 2.0;
    stats.sorted_citations = {5, 3, 0};
    table.insert(stats);

    auto index = build_author_index(corpus);
    CHECK(scientific_strength("r1", corpus, index, table, Scenario::MeanCited) == 4.0);
    CHECK(scientific_strength("r2", corpus, index, table, Scenario::MeanCited) == 0.0);
    CHECK(scientific_strength("absent", corpus, index, table, Scenario::MeanCited) == 0.0);
}

TEST_CASE("percentile scenario sums ranks {100, 50, 0} to 150") {
    auto corpus = testutil::make_corpus({{"r1", "S1", "U1"}},
                                        {{"p1", 2004, 4, {"C"}, {"r1"}},
                                         {"p2", 2004, 2, {"C"}, {"r1"}},
                                         {"p3", 2004, 1, {"C"}, {"r1"}}});
    auto table = compute_baselines(corpus);
    auto index = build_author_index(corpus);
    CHECK(scientific_strength("r1", corpus, index, table, Scenario::Percentile) == 150.0);
}

TEST_CASE("co-authored publications count fully for every author") {
    auto corpus = testutil::make_corpus({{"r1", "S1", "U1"}, {"r2", "S1", "U1"}},
                                        {{"p1", 2004, 6, {"C"}, {"r1", "r2"}}});
    auto table = compute_baselines(corpus);
    auto index = build_author_index(corpus);
    const double ss1 = scientific_strength("r1", corpus, index, table, Scenario::Citations);
    const double ss2 = scientific_strength("r2", corpus, index, table, Scenario::Citations);
    CHECK(ss1 == 6.0);
    CHECK(ss2 == 6.0);
}

TEST_CASE("reference 17-researcher column reproduces its printed percentiles") {
    std::vector<double> ss;
    for (double pct : kReferencePercentiles) ss.push_back(pct + 1.0);
    auto entries = rank_scored(scored_from(ss));
    REQUIRE(entries.size() == kReferencePercentiles.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].percentile_rank == kReferencePercentiles[i]);
    }
}

TEST_CASE("two distinct scores yield 100 and 0") {
    auto entries = rank_scored(scored_from({3.0, 7.0}));
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].researcher_id == "r2");
    CHECK(entries[0].percentile_rank == 100.0);
    CHECK(entries[1].percentile_rank == 0.0);
    CHECK(entries[0].quartile == Quartile::Q1);
    CHECK(entries[1].quartile == Quartile::Q4);
}

TEST_CASE("four researchers all tied rank 100 and Q1") {
    auto entries = rank_scored(scored_from({2.5, 2.5, 2.5, 2.5}));
    REQUIRE(entries.size() == 4);
    for (const auto& e : entries) {
        CHECK(e.percentile_rank == 100.0);
        CHECK(e.quartile == Quartile::Q1);
    }
}

TEST_CASE("zero scores are excluded from rankings") {
    auto entries = rank_scored(scored_from({4.0, 0.0, 1.0}));
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].researcher_id == "r1");
    CHECK(entries[1].researcher_id == "r3");
}

TEST_CASE("singleton ranking scores 100 and Q1") {
    auto entries = rank_scored(scored_from({0.5}));
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].percentile_rank == 100.0);
    CHECK(entries[0].quartile == Quartile::Q1);
}

TEST_CASE("quartile partition: n divisible by 4 without ties gives n/4 per class") {
    for (std::size_t n : {4u, 8u, 16u, 40u}) {
        std::vector<double> values;
        for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<double>(i + 1));
        auto entries = rank_scored(scored_from(values));
        std::map<Quartile, std::size_t> counts;
        for (const auto& e : entries) ++counts[e.quartile];
        CHECK(counts[Quartile::Q1] == n / 4);
        CHECK(counts[Quartile::Q2] == n / 4);
        CHECK(counts[Quartile::Q3] == n / 4);
        CHECK(counts[Quartile::Q4] == n / 4);
    }
}

TEST_CASE("positive rescaling leaves percentiles and quartiles unchanged") {
    SynthRng rng(7);
    std::vector<double> values;
    for (int i = 0; i < 23; ++i) values.push_back(1.0 + rng.below(12));
    auto base = rank_scored(scored_from(values));
    for (double factor : {0.25, 3.0, 1e6}) {
        std::vector<double> scaled;
        for (double v : values) scaled.push_back(v * factor);
        auto entries = rank_scored(scored_from(scaled));
        REQUIRE(entries.size() == base.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            CHECK(entries[i].researcher_id == base[i].researcher_id);
            CHECK(entries[i].percentile_rank == base[i].percentile_rank);
            CHECK(entries[i].quartile == base[i].quartile);
        }
    }
}

TEST_CASE("citation scenario ranks by raw citation totals") {
    auto corpus = testutil::make_corpus(
        {{"r1", "S1", "U1"}, {"r2", "S1", "U1"}, {"r3", "S1", "U1"}},
        {{"p1", 2004, 10, {"C"}, {"r1"}},
         {"p2", 2004, 3, {"C"}, {"r2"}},
         {"p3", 2004, 4, {"C"}, {"r2"}},
         {"p4", 2005, 2, {"C"}, {"r3"}}});
    auto table = compute_baselines(corpus);
    auto index = build_author_index(corpus);
    auto entries = rank_sds(corpus, index, table, "S1", Scenario::Citations);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].researcher_id == "r1");  // 10
    CHECK(entries[1].researcher_id == "r2");  // 7
    CHECK(entries[2].researcher_id == "r3");  // 2
}

TEST_CASE("rank_all produces one list per SDS and scenario") {
    // the extra uncited publication keeps r2's percentile score above zero
    auto corpus = testutil::make_corpus({{"r1", "S1", "U1"}, {"r2", "S1", "U1"}},
                                        {{"p1", 2004, 3, {"C"}, {"r1"}},
                                         {"p2", 2004, 1, {"C"}, {"r2"}},
                                         {"p3", 2004, 0, {"C"}, {"r1"}}});
    auto table = compute_baselines(corpus);
    auto rankings = rank_all(corpus, table, kAllScenarios);
    CHECK(rankings.size() == 5);
    CHECK(rankings.scenarios().size() == 5);
    for (Scenario s : kAllScenarios) {
        REQUIRE(rankings.find("S1", s) != nullptr);
        CHECK(rankings.find("S1", s)->size() == 2);
    }
}

TEST_CASE("rank_all on an empty corpus yields an empty table") {
    Corpus corpus;
    auto rankings = rank_all(corpus, BaselineTable{}, kAllScenarios);
    CHECK(rankings.empty());
}

TEST_CASE("rank_all agrees with rank_sds and is deterministic") {
    SynthConfig config;
    config.seed = 21;
    config.n_sds = 4;
    config.researchers_per_sds_min = 5;
    config.researchers_per_sds_max = 30;
    auto corpus = generate_corpus(config);
    auto table = compute_baselines(corpus);
    auto index = build_author_index(corpus);

    auto rankings = rank_all(corpus, table, kAllScenarios);
    for (const auto& sds : rankings.sds_codes()) {
        for (Scenario scenario : kAllScenarios) {
            auto direct = rank_sds(corpus, index, table, sds, scenario);
            const auto* batch = rankings.find(sds, scenario);
            REQUIRE(batch != nullptr);
            REQUIRE(batch->size() == direct.size());
            for (std::size_t i = 0; i < direct.size(); ++i) {
                CHECK((*batch)[i].researcher_id == direct[i].researcher_id);
                CHECK((*batch)[i].ss == direct[i].ss);
                CHECK((*batch)[i].percentile_rank == direct[i].percentile_rank);
            }
        }
    }

    auto again = rank_all(corpus, table, kAllScenarios);
    std::ostringstream first, second;
    write_rankings(rankings, first);
    write_rankings(again, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("percentiles never increase down a list and tie exactly with equal scores") {
    SynthConfig config;
    config.seed = 33;
    config.n_sds = 5;
    config.researchers_per_sds_min = 10;
    config.researchers_per_sds_max = 60;
    auto corpus = generate_corpus(config);
    auto table = compute_baselines(corpus);
    auto rankings = rank_all(corpus, table, kAllScenarios);
    std::size_t checked = 0;
    for (const auto& [key, entries] : rankings) {
        for (std::size_t i = 1; i < entries.size(); ++i) {
            CHECK(entries[i].percentile_rank <= entries[i - 1].percentile_rank);
            if (entries[i].ss == entries[i - 1].ss) {
                CHECK(entries[i].percentile_rank == entries[i - 1].percentile_rank);
            } else {
                CHECK(entries[i].percentile_rank < entries[i - 1].percentile_rank);
            }
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("ranking export format and row ordering") {
    RankingTable table;
    table.insert("S1", Scenario::MeanCited, rank_scored(scored_from({2.0, 1.0})));
    table.insert("S1", Scenario::Citations, rank_scored(scored_from({5.0})));
    std::ostringstream out;
    write_rankings(table, out);
    // rows sorted by SDS code then scenario tag: a0 before cit
    CHECK(out.str() ==
          "sds,scenario,researcher_id,ss,percentile_rank,quartile\n"
          "S1,a0,r1,2.000000,100.00,Q1\n"
          "S1,a0,r2,1.000000,0.00,Q4\n"
          "S1,cit,r1,5.000000,100.00,Q1\n");
}

} // TEST_SUITE
