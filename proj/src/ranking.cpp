#include "citerank/ranking.hpp"

#include <algorithm>
#include <ostream>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"
#include "citerank/stats.hpp"

namespace citerank {

std::string_view quartile_tag(Quartile q) {
    switch (q) {
        case Quartile::Q1: return "Q1";
        case Quartile::Q2: return "Q2";
        case Quartile::Q3: return "Q3";
        case Quartile::Q4: return "Q4";
    }
    return "?";
}

Quartile quartile_of(double percentile_rank) {
    if (percentile_rank >= 75.0) return Quartile::Q1;
    if (percentile_rank >= 50.0) return Quartile::Q2;
    if (percentile_rank >= 25.0) return Quartile::Q3;
    return Quartile::Q4;
}

double scientific_strength(const std::string& researcher_id, const Corpus& corpus,
                           const AuthorIndex& index, const BaselineTable& table,
                           Scenario scenario) {
    auto it = index.find(researcher_id);
    if (it == index.end()) return 0.0;
    double ss = 0.0;
    for (std::size_t pub_index : it->second) {
        ss += impact_of(corpus.publications[pub_index], table, scenario);
    }
    return ss;
}

std::vector<RankingEntry> rank_scored(std::vector<ScoredResearcher> scored) {
    std::erase_if(scored, [](const ScoredResearcher& s) { return s.ss == 0.0; });
    std::sort(scored.begin(), scored.end(), [](const ScoredResearcher& a, const ScoredResearcher& b) {
        if (a.ss != b.ss) return a.ss > b.ss;
        return a.researcher_id < b.researcher_id;
    });

    const std::size_t n = scored.size();
    std::vector<RankingEntry> entries;
    entries.reserve(n);
    std::size_t block_rank = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && scored[i].ss != scored[i - 1].ss) block_rank = i + 1;
        RankingEntry entry;
        entry.researcher_id = std::move(scored[i].researcher_id);
        entry.ss = scored[i].ss;
        entry.percentile_rank = stats::rank_percentile(n, block_rank);
        entry.quartile = quartile_of(entry.percentile_rank);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<RankingEntry> rank_sds(const Corpus& corpus, const AuthorIndex& index,
                                   const BaselineTable& table, std::string_view sds,
                                   Scenario scenario) {
    std::vector<ScoredResearcher> scored;
    for (const auto& r : corpus.researchers) {
        if (r.sds != sds) continue;
        scored.push_back({r.researcher_id, scientific_strength(r.researcher_id, corpus, index, table,
                                                               scenario)});
    }
    return rank_scored(std::move(scored));
}

void RankingTable::insert(const std::string& sds, Scenario scenario,
                          std::vector<RankingEntry> entries) {
    lists_[{sds, scenario_order(scenario)}] = std::move(entries);
    if (std::find(scenarios_.begin(), scenarios_.end(), scenario) == scenarios_.end()) {
        scenarios_.push_back(scenario);
        std::sort(scenarios_.begin(), scenarios_.end(),
                  [](Scenario a, Scenario b) { return scenario_order(a) < scenario_order(b); });
    }
}

const std::vector<RankingEntry>* RankingTable::find(std::string_view sds,
                                                    Scenario scenario) const noexcept {
    auto it = lists_.find({std::string(sds), scenario_order(scenario)});
    return it == lists_.end() ? nullptr : &it->second;
}

std::vector<std::string> RankingTable::sds_codes() const {
    std::vector<std::string> codes;
    for (const auto& [key, entries] : lists_) {
        if (codes.empty() || codes.back() != key.first) codes.push_back(key.first);
    }
    return codes;
}

RankingTable rank_all(const Corpus& corpus, const BaselineTable& table,
                      std::span<const Scenario> scenarios) {
    std::vector<Scenario> wanted;
    for (Scenario s : scenarios) {
        if (std::find(wanted.begin(), wanted.end(), s) == wanted.end()) wanted.push_back(s);
    }
    std::sort(wanted.begin(), wanted.end(),
              [](Scenario a, Scenario b) { return scenario_order(a) < scenario_order(b); });

    const AuthorIndex index = build_author_index(corpus);

    // sds -> member researcher ids, corpus order
    std::map<std::string, std::vector<const std::string*>> members;
    for (const auto& r : corpus.researchers) {
        members[r.sds].push_back(&r.researcher_id);
    }

    RankingTable result;
    std::vector<double> impacts(corpus.publications.size(), 0.0);
    for (Scenario scenario : wanted) {
        for (std::size_t i = 0; i < corpus.publications.size(); ++i) {
            impacts[i] = impact_of(corpus.publications[i], table, scenario);
        }
        for (const auto& [sds, ids] : members) {
            std::vector<ScoredResearcher> scored;
            scored.reserve(ids.size());
            for (const std::string* id : ids) {
                double ss = 0.0;
                if (auto it = index.find(*id); it != index.end()) {
                    for (std::size_t pub_index : it->second) ss += impacts[pub_index];
                }
                scored.push_back({*id, ss});
            }
            result.insert(sds, scenario, rank_scored(std::move(scored)));
        }
    }
    return result;
}

void write_rankings(const RankingTable& table, std::ostream& out, char delimiter) {
    const char d = delimiter;
    out << "sds" << d << "scenario" << d << "researcher_id" << d << "ss" << d << "percentile_rank"
        << d << "quartile" << '\n';
    // rows ordered by SDS code, then scenario tag
    std::vector<Scenario> by_tag = table.scenarios();
    std::sort(by_tag.begin(), by_tag.end(),
              [](Scenario a, Scenario b) { return scenario_tag(a) < scenario_tag(b); });
    for (const auto& sds : table.sds_codes()) {
        for (Scenario scenario : by_tag) {
            const auto* entries = table.find(sds, scenario);
            if (!entries) continue;
            for (const auto& entry : *entries) {
                out << sds << d << scenario_tag(scenario) << d << entry.researcher_id << d
                    << format_fixed(entry.ss, 6) << d << format_fixed(entry.percentile_rank, 2) << d
                    << quartile_tag(entry.quartile) << '\n';
            }
        }
    }
}

} // namespace citerank
