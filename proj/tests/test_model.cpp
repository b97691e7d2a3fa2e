#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "citerank/errors.hpp"
#include "citerank/model.hpp"
#include "citerank/synth.hpp"
#include "testutil.hpp"

using namespace citerank;

namespace {

Corpus load_strings(const std::string& pubs, const std::string& res, LoadOptions options = {}) {
    std::istringstream pin(pubs), rin(res);
    return load_corpus(pin, "pubs.csv", rin, "researchers.csv", options);
}

const std::string kResearchers = "researcher_id,sds,uda\nr1,AGR/10,AG\n";

} // namespace

TEST_SUITE("model") {

TEST_CASE("two valid rows load into a corpus of two publications") {
    auto corpus = load_strings(
        "pub_id,year,citations,categories,author_ids\n"
        "p1,2004,3,UI,r1\n"
        "p2,2005,0,UI;PY,r1\n",
        kResearchers);
    REQUIRE(corpus.publications.size() == 2);
    CHECK(corpus.researchers.size() == 1);
    CHECK(corpus.publications[1].categories.size() == 2);
    CHECK(corpus.window == YearRange{2004, 2005});
}

TEST_CASE("negative citations name the offending row") {
    try {
        load_strings(
            "pub_id,year,citations,categories,author_ids\n"
            "p1,2004,-1,UI,r1\n",
            kResearchers);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == "citations");
        CHECK(e.source() == "pubs.csv");
    }
}

TEST_CASE("dangling author ids are rejected") {
    const std::string pubs =
        "pub_id,year,citations,categories,author_ids\n"
        "p1,2004,3,UI,r1;ghost\n";
    // oracle: scan the author lists against the researcher id set
    std::set<std::string> known{"r1"};
    bool dangling = false;
    for (const std::string& author : {std::string("r1"), std::string("ghost")}) {
        if (!known.contains(author)) dangling = true;
    }
    REQUIRE(dangling);
    CHECK_THROWS_AS(load_strings(pubs, kResearchers), ParseError);
}

TEST_CASE("byte-identical duplicate rows collapse, conflicting ones fail") {
    auto corpus = load_strings(
        "pub_id,year,citations,categories,author_ids\n"
        "p1,2004,3,UI,r1\n"
        "p1,2004,3,UI,r1\n",
        kResearchers);
    CHECK(corpus.publications.size() == 1);

    CHECK_THROWS_AS(load_strings(
                        "pub_id,year,citations,categories,author_ids\n"
                        "p1,2004,3,UI,r1\n"
                        "p1,2004,4,UI,r1\n",
                        kResearchers),
                    ParseError);
}

TEST_CASE("year outside an explicit window is rejected") {
    LoadOptions options;
    options.window = YearRange{2004, 2008};
    CHECK_THROWS_AS(load_strings(
                        "pub_id,year,citations,categories,author_ids\n"
                        "p1,2009,3,UI,r1\n",
                        kResearchers, options),
                    ParseError);
}

TEST_CASE("empty researcher set is rejected") {
    CHECK_THROWS_AS(load_strings("pub_id,year,citations,categories,author_ids\n",
                                 "researcher_id,sds,uda\n"),
                    ParseError);
}

TEST_CASE("an SDS mapping to two UDAs is rejected") {
    CHECK_THROWS_AS(load_strings("pub_id,year,citations,categories,author_ids\n",
                                 "researcher_id,sds,uda\nr1,S1,U1\nr2,S1,U2\n"),
                    ParseError);
}

TEST_CASE("empty category list is rejected") {
    CHECK_THROWS_AS(load_strings(
                        "pub_id,year,citations,categories,author_ids\n"
                        "p1,2004,3,,r1\n",
                        kResearchers),
                    ParseError);
}

TEST_CASE("filter keeps an SDS exactly at the threshold") {
    auto corpus = testutil::make_corpus(
        {{"r1", "S1", "U1"}, {"r2", "S1", "U1"}, {"r3", "S1", "U1"}, {"r4", "S1", "U1"}},
        {{"p1", 2004, 1, {"C"}, {"r1"}}, {"p2", 2004, 2, {"C"}, {"r2"}}});
    auto result = filter_sds(corpus, 0.5);  // 2 of 4 publish
    CHECK(result.excluded_sds.empty());
    CHECK(result.corpus.researchers.size() == 4);
}

TEST_CASE("filter drops an SDS below the threshold") {
    auto corpus = testutil::make_corpus(
        {{"r1", "S1", "U1"}, {"r2", "S1", "U1"}, {"r3", "S1", "U1"}, {"r4", "S1", "U1"}},
        {{"p1", 2004, 1, {"C"}, {"r1"}}});
    auto result = filter_sds(corpus, 0.5);  // 1 of 4 publish
    REQUIRE(result.excluded_sds.size() == 1);
    CHECK(result.excluded_sds[0] == "S1");
    CHECK(result.corpus.researchers.empty());
    CHECK(result.corpus.publications.empty());
}

TEST_CASE("a publication survives through a retained co-author") {
    auto corpus = testutil::make_corpus(
        {{"a1", "KEEP", "U1"}, {"a2", "KEEP", "U1"},
         {"b1", "DROP", "U1"}, {"b2", "DROP", "U1"}},
        {{"p1", 2004, 5, {"C"}, {"a1", "b1"}},   // shared: survives with pruned authors
         {"p2", 2004, 7, {"C"}, {"b1"}},         // fully orphaned: dropped
         {"p3", 2004, 1, {"C"}, {"a2"}}});
    // KEEP: 2/2 publish; DROP: 1/2 = 0.5 < 0.9
    auto result = filter_sds(corpus, 0.9);
    REQUIRE(result.excluded_sds == std::vector<std::string>{"DROP"});
    REQUIRE(result.corpus.publications.size() == 2);
    CHECK(result.corpus.publications[0].pub_id == "p1");
    CHECK(result.corpus.publications[0].author_ids == std::vector<std::string>{"a1"});
    validate_corpus(result.corpus);
}

TEST_CASE("filter is idempotent and keeps every researcher of a retained SDS") {
    SynthConfig config;
    config.seed = 11;
    config.n_sds = 6;
    config.researchers_per_sds_min = 4;
    config.researchers_per_sds_max = 20;
    config.pubs_per_researcher_mean = 1.0;
    config.inactive_fraction = 0.45;
    auto corpus = generate_corpus(config);

    auto once = filter_sds(corpus, 0.5);
    auto twice = filter_sds(once.corpus, 0.5);
    CHECK(twice.excluded_sds.empty());
    CHECK(testutil::serialize_corpus(once.corpus) == testutil::serialize_corpus(twice.corpus));

    // every researcher of a retained SDS is still present
    std::set<std::string> retained;
    for (const auto& r : once.corpus.researchers) retained.insert(r.sds);
    std::size_t expected = 0;
    for (const auto& r : corpus.researchers) {
        if (retained.contains(r.sds)) ++expected;
    }
    CHECK(once.corpus.researchers.size() == expected);
}

TEST_CASE("filter threshold outside (0, 1] is rejected") {
    auto corpus = testutil::make_corpus({{"r1", "S1", "U1"}}, {});
    CHECK_THROWS_AS(filter_sds(corpus, 0.0), ConfigError);
    CHECK_THROWS_AS(filter_sds(corpus, 1.5), ConfigError);
}

TEST_CASE("save then load is the identity on a valid corpus") {
    SynthConfig config;
    config.seed = 3;
    config.n_sds = 4;
    config.researchers_per_sds_min = 3;
    config.researchers_per_sds_max = 12;
    config.pubs_per_researcher_mean = 3.0;
    auto corpus = generate_corpus(config);

    std::ostringstream pubs, res;
    save_corpus(corpus, pubs, res);
    std::istringstream pin(pubs.str()), rin(res.str());
    LoadOptions options;
    options.window = corpus.window;
    options.census_date = corpus.census_date;
    auto reloaded = load_corpus(pin, "pubs.csv", rin, "researchers.csv", options);
    CHECK(testutil::serialize_corpus(corpus) == testutil::serialize_corpus(reloaded));
}

TEST_CASE("author index lists publications in ascending order") {
    auto corpus = testutil::make_corpus(
        {{"r1", "S1", "U1"}, {"r2", "S1", "U1"}},
        {{"p1", 2004, 1, {"C"}, {"r1", "r2"}},
         {"p2", 2004, 2, {"C"}, {"r2"}},
         {"p3", 2005, 3, {"C"}, {"r1"}}});
    auto index = build_author_index(corpus);
    CHECK(index["r1"] == std::vector<std::size_t>{0, 2});
    CHECK(index["r2"] == std::vector<std::size_t>{0, 1});
}

} // TEST_SUITE
