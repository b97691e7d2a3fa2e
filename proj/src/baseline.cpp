#include "citerank/baseline.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "citerank/csv.hpp"
#include "citerank/errors.hpp"

namespace citerank {

void BaselineTable::insert(BaselineStats stats) {
    Key key{stats.year, stats.category};
    groups_[std::move(key)] = std::move(stats);
}

const BaselineStats* BaselineTable::find(int year, std::string_view category) const noexcept {
    auto it = groups_.find(Key{year, std::string(category)});
    return it == groups_.end() ? nullptr : &it->second;
}

const BaselineStats& BaselineTable::at(int year, std::string_view category) const {
    const BaselineStats* stats = find(year, category);
    if (!stats) throw MissingGroupError(year, std::string(category));
    return *stats;
}

BaselineTable compute_baselines(const Corpus& corpus) {
    std::map<BaselineTable::Key, std::vector<std::int64_t>> buckets;
    for (const auto& pub : corpus.publications) {
        for (const auto& category : pub.categories) {
            buckets[{pub.year, category}].push_back(pub.citations);
        }
    }

    BaselineTable table;
    for (auto& [key, citations] : buckets) {
        std::sort(citations.begin(), citations.end(), std::greater<std::int64_t>{});

        BaselineStats stats;
        stats.year = key.first;
        stats.category = key.second;
        stats.n_total = citations.size();

        std::int64_t sum = 0;
        std::size_t cited = 0;
        for (std::int64_t c : citations) {
            sum += c;
            if (c > 0) ++cited;
        }
        stats.n_cited = cited;
        stats.mean_all = static_cast<double>(sum) / static_cast<double>(stats.n_total);
        if (cited > 0) {
            // zeros sort to the back, so the cited values are the first `cited` entries
            stats.mean_cited = static_cast<double>(sum) / static_cast<double>(cited);
            const std::size_t lo = (cited - 1) / 2;  // ascending middle indices
            const std::size_t hi = cited / 2;
            const double lo_val = static_cast<double>(citations[cited - 1 - lo]);
            const double hi_val = static_cast<double>(citations[cited - 1 - hi]);
            stats.median_cited = (lo_val + hi_val) / 2.0;
        }
        stats.sorted_citations = std::move(citations);
        table.insert(std::move(stats));
    }
    return table;
}

void write_baselines(const BaselineTable& table, std::ostream& out, char delimiter) {
    const char d = delimiter;
    out << "year" << d << "category" << d << "n_total" << d << "n_cited" << d << "a" << d << "a0"
        << d << "m0" << '\n';
    for (const auto& [key, stats] : table) {
        out << stats.year << d << stats.category << d << stats.n_total << d << stats.n_cited << d
            << format_fixed(stats.mean_all, 6) << d
            << (stats.mean_cited ? format_fixed(*stats.mean_cited, 6) : std::string{}) << d
            << (stats.median_cited ? format_fixed(*stats.median_cited, 6) : std::string{}) << '\n';
    }
}

} // namespace citerank
