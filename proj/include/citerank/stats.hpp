#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace citerank::stats {

inline double mean(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / static_cast<double>(xs.size());
}

inline double median_sorted(std::span<const double> sorted) {
    const std::size_t n = sorted.size();
    if (n == 0) return 0.0;
    const std::size_t lo = (n - 1) / 2;
    const std::size_t hi = n / 2;
    return (sorted[lo] + sorted[hi]) / 2.0;
}

inline double median_unsorted(std::span<const double> xs) {
    std::vector<double> copy(xs.begin(), xs.end());
    std::sort(copy.begin(), copy.end());
    return median_sorted(copy);
}

// Sample standard deviation (n-1 denominator); 0 for fewer than 2 values.
inline double sample_sd(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 2) return 0.0;
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(n - 1));
}

// 1-based ranks with tied values sharing the average rank of their block.
inline std::vector<double> midranks(std::span<const double> xs) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && xs[order[j + 1]] == xs[order[i]]) ++j;
        const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

// Percentile of the best (1-based) rank r among n items: 100*(n-r)/(n-1).
// A singleton population scores 100.
inline double rank_percentile(std::size_t n, std::size_t best_rank) {
    if (n <= 1) return 100.0;
    return 100.0 * static_cast<double>(n - best_rank) / static_cast<double>(n - 1);
}

} // namespace citerank::stats
