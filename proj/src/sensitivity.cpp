#include "citerank/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "citerank/errors.hpp"
#include "citerank/stats.hpp"

namespace citerank {

double spearman(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw Error("spearman: paired lists differ in length");
    }
    const std::size_t n = xs.size();
    if (n < 2) {
        throw UndefinedCorrelationError("spearman needs at least 2 paired observations, got " +
                                        std::to_string(n));
    }
    const std::vector<double> rx = stats::midranks(xs);
    const std::vector<double> ry = stats::midranks(ys);

    const double mx = stats::mean(rx);
    const double my = stats::mean(ry);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw UndefinedCorrelationError("spearman undefined: a rank vector has zero variance");
    }
    const double rho = sxy / std::sqrt(sxx * syy);
    return std::clamp(rho, -1.0, 1.0);
}

namespace {

std::unordered_map<std::string_view, double> ss_by_id(const std::vector<RankingEntry>& entries) {
    std::unordered_map<std::string_view, double> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.emplace(e.researcher_id, e.ss);
    return out;
}

std::unordered_map<std::string_view, Quartile> quartile_by_id(
    const std::vector<RankingEntry>& entries) {
    std::unordered_map<std::string_view, Quartile> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.emplace(e.researcher_id, e.quartile);
    return out;
}

std::string uda_of(const Taxonomy& taxonomy, const std::string& sds) {
    auto it = taxonomy.find(sds);
    return it == taxonomy.end() ? std::string{} : it->second;
}

std::vector<ShiftRow> finish_shift_rows(std::map<std::string, std::pair<std::size_t, std::size_t>>&&
                                            per_uda,
                                        Scenario scenario) {
    std::vector<ShiftRow> rows;
    std::size_t total_n = 0, total_moved = 0;
    for (auto& [uda, counts] : per_uda) {
        const auto [n, moved] = counts;
        ShiftRow row;
        row.uda = uda;
        row.scenario = scenario;
        row.n = n;
        row.moved = moved;
        row.pct = n ? 100.0 * static_cast<double>(moved) / static_cast<double>(n) : 0.0;
        rows.push_back(std::move(row));
        total_n += n;
        total_moved += moved;
    }
    ShiftRow total;
    total.is_total = true;
    total.scenario = scenario;
    total.n = total_n;
    total.moved = total_moved;
    total.pct = total_n ? 100.0 * static_cast<double>(total_moved) / static_cast<double>(total_n)
                        : 0.0;
    rows.push_back(std::move(total));
    return rows;
}

} // namespace

std::vector<SdsCorrelation> sds_correlations(const RankingTable& rankings, Scenario benchmark,
                                             const Taxonomy& taxonomy) {
    std::vector<SdsCorrelation> out;
    for (const auto& sds : rankings.sds_codes()) {
        const auto* bench_entries = rankings.find(sds, benchmark);
        for (Scenario scenario : rankings.scenarios()) {
            const auto* entries = rankings.find(sds, scenario);
            SdsCorrelation corr;
            corr.sds = sds;
            corr.uda = uda_of(taxonomy, sds);
            corr.scenario = scenario;
            if (entries && bench_entries) {
                auto bench_ss = ss_by_id(*bench_entries);
                std::vector<double> xs, ys;
                xs.reserve(entries->size());
                ys.reserve(entries->size());
                for (const auto& e : *entries) {
                    auto it = bench_ss.find(e.researcher_id);
                    if (it == bench_ss.end()) continue;
                    xs.push_back(e.ss);
                    ys.push_back(it->second);
                }
                corr.n = xs.size();
                try {
                    corr.rho = spearman(xs, ys);
                } catch (const UndefinedCorrelationError&) {
                    corr.rho = std::nullopt;
                }
            }
            out.push_back(std::move(corr));
        }
    }
    return out;
}

std::vector<UdaStats> uda_descriptives(const std::vector<SdsCorrelation>& correlations) {
    // (uda, scenario order) -> defined coefficients
    std::map<std::pair<std::string, int>, std::vector<double>> groups;
    for (const auto& corr : correlations) {
        if (!corr.rho) continue;
        groups[{corr.uda, scenario_order(corr.scenario)}].push_back(*corr.rho);
    }
    std::vector<UdaStats> out;
    for (auto& [key, rhos] : groups) {
        UdaStats stats;
        stats.uda = key.first;
        stats.scenario = kAllScenarios[static_cast<std::size_t>(key.second)];
        stats.n_sds = rhos.size();
        stats.mean = stats::mean(rhos);
        stats.sd = stats::sample_sd(rhos);
        stats.median = stats::median_unsorted(rhos);
        auto [min_it, max_it] = std::minmax_element(rhos.begin(), rhos.end());
        stats.min = *min_it;
        stats.max = *max_it;
        out.push_back(std::move(stats));
    }
    return out;
}

std::vector<ShiftRow> quartile_shift(const RankingTable& rankings, Scenario scenario,
                                     Scenario benchmark, const Taxonomy& taxonomy) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_uda;  // uda -> (n, moved)
    for (const auto& sds : rankings.sds_codes()) {
        const auto* entries = rankings.find(sds, scenario);
        const auto* bench_entries = rankings.find(sds, benchmark);
        auto& [n, moved] = per_uda[uda_of(taxonomy, sds)];
        if (!entries || !bench_entries) continue;
        auto bench_quartiles = quartile_by_id(*bench_entries);
        for (const auto& e : *entries) {
            auto it = bench_quartiles.find(e.researcher_id);
            if (it == bench_quartiles.end()) continue;  // ranked under one list only
            ++n;
            if (e.quartile != it->second) ++moved;
        }
    }
    return finish_shift_rows(std::move(per_uda), scenario);
}

std::vector<ShiftRow> extreme_shift(const RankingTable& rankings, Scenario scenario,
                                    Scenario benchmark, Extreme which, const Taxonomy& taxonomy) {
    const Quartile target = which == Extreme::Top ? Quartile::Q1 : Quartile::Q4;
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_uda;  // uda -> (n, lost)
    for (const auto& sds : rankings.sds_codes()) {
        const auto* bench_entries = rankings.find(sds, benchmark);
        auto& [n, lost] = per_uda[uda_of(taxonomy, sds)];
        if (!bench_entries) continue;
        const auto* entries = rankings.find(sds, scenario);
        std::unordered_map<std::string_view, Quartile> scenario_quartiles;
        if (entries) scenario_quartiles = quartile_by_id(*entries);
        for (const auto& e : *bench_entries) {
            if (e.quartile != target) continue;
            ++n;
            auto it = scenario_quartiles.find(e.researcher_id);
            if (it == scenario_quartiles.end() || it->second != target) ++lost;
        }
    }
    return finish_shift_rows(std::move(per_uda), scenario);
}

SensitivityReport build_sensitivity(const Corpus& ranked_corpus, const RankingTable& rankings,
                                    Scenario benchmark) {
    const Taxonomy taxonomy = sds_taxonomy(ranked_corpus);

    SensitivityReport report;
    report.meta.benchmark = benchmark;
    report.meta.scenarios = rankings.scenarios();
    report.meta.window = ranked_corpus.window;
    report.meta.census_date = ranked_corpus.census_date;
    report.meta.n_publications = ranked_corpus.publications.size();
    report.meta.n_researchers = ranked_corpus.researchers.size();
    report.meta.n_sds = taxonomy.size();
    {
        std::vector<std::string> udas;
        for (const auto& [sds, uda] : taxonomy) udas.push_back(uda);
        std::sort(udas.begin(), udas.end());
        udas.erase(std::unique(udas.begin(), udas.end()), udas.end());
        report.meta.n_uda = udas.size();
    }

    report.correlations = sds_correlations(rankings, benchmark, taxonomy);
    report.uda_stats = uda_descriptives(report.correlations);
    for (Scenario scenario : rankings.scenarios()) {
        auto quartile = quartile_shift(rankings, scenario, benchmark, taxonomy);
        auto top = extreme_shift(rankings, scenario, benchmark, Extreme::Top, taxonomy);
        auto bottom = extreme_shift(rankings, scenario, benchmark, Extreme::Bottom, taxonomy);
        report.quartile_changes.insert(report.quartile_changes.end(), quartile.begin(),
                                       quartile.end());
        report.top_losses.insert(report.top_losses.end(), top.begin(), top.end());
        report.bottom_losses.insert(report.bottom_losses.end(), bottom.begin(), bottom.end());
    }
    return report;
}

} // namespace citerank
