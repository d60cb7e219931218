#pragma once

/// @file stats.hpp
/// @brief Descriptive statistics, the two-sample Wilcoxon rank-sum test
/// and Friedman mean ranks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace shrike::stats {

struct MeanStd {
    double mean;
    double std; // sample standard deviation, divisor n - 1
};

inline MeanStd mean_std(std::span<const double> s) {
    if (s.size() < 2) throw std::invalid_argument("mean_std: need at least two values");
    const double n = static_cast<double>(s.size());
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / n;
    double ss = 0;
    for (double v : s) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

/// 1-based ranks, ties receive the average of the ranks they span.
inline std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && values[order[j]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
        i = j;
    }
    return ranks;
}

enum class Alternative {
    two_sided,
    less,    // first sample tends to be smaller
    greater, // first sample tends to be larger
};

enum class Method { automatic, exact, normal };

struct RankSumResult {
    double statistic; // rank sum of the first sample
    double p;
    bool exact;
};

/// Samples up to this size (the smaller of the two) get the exact null
/// distribution in automatic mode.
constexpr std::size_t kExactRankSumLimit = 10;

namespace detail {

inline double clamp_p(double p) {
    if (!(p > 0)) return std::numeric_limits<double>::min();
    return std::min(p, 1.0);
}

/// Exact null distribution of the sum of k of the given doubled ranks
/// (integers), by subset-sum counting. counts[s] = #subsets with sum s.
inline std::vector<long double> subset_sum_counts(const std::vector<std::int64_t>& ranks2, std::size_t k) {
    std::int64_t max_sum = 0;
    {
        auto sorted = ranks2;
        std::sort(sorted.rbegin(), sorted.rend());
        for (std::size_t i = 0; i < k; ++i) max_sum += sorted[i];
    }
    const std::size_t width = static_cast<std::size_t>(max_sum) + 1;
    // table[j][s]: subsets of size j with sum s among the ranks seen so far.
    std::vector<std::vector<long double>> table(k + 1, std::vector<long double>(width, 0.0L));
    table[0][0] = 1.0L;
    std::size_t seen = 0;
    for (std::int64_t r : ranks2) {
        ++seen;
        for (std::size_t j = std::min(k, seen); j >= 1; --j) {
            auto& dst = table[j];
            const auto& src = table[j - 1];
            for (std::size_t s = width; s-- > static_cast<std::size_t>(r);) dst[s] += src[s - static_cast<std::size_t>(r)];
        }
    }
    return table[k];
}

} // namespace detail

/// Two-sample Wilcoxon rank-sum (Mann-Whitney) test.
///
/// Ties get average ranks. The exact permutation p-value is used when the
/// smaller sample has at most kExactRankSumLimit values (automatic mode),
/// otherwise the normal approximation with tie-corrected variance and a
/// 0.5 continuity correction. A pooled sample of identical values gives
/// p = 1.
inline RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                       Alternative alt = Alternative::two_sided, Method method = Method::automatic) {
    if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("wilcoxon_rank_sum: each sample needs >= 2 values");
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = average_ranks(pooled);
    const double w = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(na), 0.0);

    const bool exact = method == Method::exact ||
                       (method == Method::automatic && std::min(na, nb) <= kExactRankSumLimit);
    if (std::all_of(pooled.begin(), pooled.end(), [&](double v) { return v == pooled.front(); }))
        return {w, 1.0, exact};

    if (exact) {
        // Doubling makes average ranks integral.
        std::vector<std::int64_t> ranks2(n);
        for (std::size_t i = 0; i < n; ++i) ranks2[i] = std::llround(2.0 * ranks[i]);
        const std::int64_t total2 = std::accumulate(ranks2.begin(), ranks2.end(), std::int64_t{0});
        const std::int64_t wa2 = std::accumulate(ranks2.begin(), ranks2.begin() + static_cast<std::ptrdiff_t>(na),
                                                 std::int64_t{0});
        // Enumerate the smaller side; flip the statistic if that is b.
        const bool use_a = na <= nb;
        const std::size_t k = use_a ? na : nb;
        const std::int64_t obs2 = use_a ? wa2 : total2 - wa2;
        const auto counts = detail::subset_sum_counts(ranks2, k);
        const std::int64_t mean2x2 = 2 * static_cast<std::int64_t>(k) * static_cast<std::int64_t>(n + 1); // 2 * 2mu
        long double all = 0, hit = 0;
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0) continue;
            all += counts[s];
            const auto s2 = static_cast<std::int64_t>(s);
            bool extreme = false;
            switch (alt) {
            case Alternative::two_sided:
                extreme = std::llabs(2 * s2 - mean2x2) >= std::llabs(2 * obs2 - mean2x2);
                break;
            case Alternative::less: // W_a small <=> enumerated sum small when use_a
                extreme = use_a ? s2 <= obs2 : s2 >= obs2;
                break;
            case Alternative::greater:
                extreme = use_a ? s2 >= obs2 : s2 <= obs2;
                break;
            }
            if (extreme) hit += counts[s];
        }
        return {w, detail::clamp_p(static_cast<double>(hit / all)), true};
    }

    const double dn = static_cast<double>(n);
    const double mu = static_cast<double>(na) * (dn + 1.0) / 2.0;
    double tie_term = 0;
    {
        auto sorted = pooled;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i + 1;
            while (j < n && sorted[j] == sorted[i]) ++j;
            const double t = static_cast<double>(j - i);
            tie_term += t * t * t - t;
            i = j;
        }
    }
    const double var = static_cast<double>(na) * static_cast<double>(nb) / 12.0 *
                       ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    const double sigma = std::sqrt(var);
    double p = 1.0;
    switch (alt) {
    case Alternative::two_sided: {
        const double z = std::max(0.0, std::abs(w - mu) - 0.5) / sigma;
        p = std::erfc(z / std::sqrt(2.0));
        break;
    }
    case Alternative::less: {
        const double z = (w - mu + 0.5) / sigma;
        p = 0.5 * std::erfc(-z / std::sqrt(2.0));
        break;
    }
    case Alternative::greater: {
        const double z = (w - mu - 0.5) / sigma;
        p = 0.5 * std::erfc(z / std::sqrt(2.0));
        break;
    }
    }
    return {w, detail::clamp_p(p), false};
}

// ---------------------------------------------------------------------------
// Friedman

/// rows = rounds, columns = algorithms.
using RankMatrix = std::vector<std::vector<double>>;

struct FriedmanResult {
    std::vector<double> mean_ranks;
    std::vector<std::size_t> final_rank; // 1 = best; ties share the lower rank
};

/// Competition ranking of scores (ascending, 1-based, ties share).
inline std::vector<std::size_t> order_ranks(std::span<const double> scores) {
    std::vector<std::size_t> out(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        std::size_t better = 0;
        for (double s : scores)
            if (s < scores[i]) ++better;
        out[i] = better + 1;
    }
    return out;
}

inline std::vector<std::vector<double>> row_ranks(const RankMatrix& mat) {
    if (mat.empty()) throw std::invalid_argument("friedman: need at least one row");
    const std::size_t cols = mat.front().size();
    if (cols < 2) throw std::invalid_argument("friedman: need at least two algorithms");
    std::vector<std::vector<double>> out;
    out.reserve(mat.size());
    for (const auto& row : mat) {
        if (row.size() != cols) throw std::invalid_argument("friedman: ragged matrix");
        out.push_back(average_ranks(row));
    }
    return out;
}

/// Ranks each row ascending (1 = lowest value) and averages per column.
inline FriedmanResult friedman(const RankMatrix& mat) {
    const auto ranks = row_ranks(mat);
    const std::size_t cols = ranks.front().size();
    FriedmanResult r;
    r.mean_ranks.assign(cols, 0.0);
    for (const auto& row : ranks)
        for (std::size_t c = 0; c < cols; ++c) r.mean_ranks[c] += row[c];
    for (auto& m : r.mean_ranks) m /= static_cast<double>(ranks.size());
    r.final_rank = order_ranks(r.mean_ranks);
    return r;
}

struct FriedmanSummary {
    std::vector<std::vector<double>> per_function; // mean ranks per function
    std::vector<double> rank_sum;                  // "Mean Rank" row
    std::vector<std::size_t> final_rank;           // "Rank" row
};

/// Per-function mean ranks summed across functions; algorithms are ordered
/// by ascending sum.
inline FriedmanSummary friedman_summary(const std::vector<RankMatrix>& functions) {
    if (functions.empty()) throw std::invalid_argument("friedman_summary: no functions");
    FriedmanSummary s;
    for (const auto& m : functions) {
        auto r = friedman(m);
        if (!s.per_function.empty() && r.mean_ranks.size() != s.per_function.front().size())
            throw std::invalid_argument("friedman_summary: algorithm count differs between functions");
        s.per_function.push_back(std::move(r.mean_ranks));
    }
    s.rank_sum.assign(s.per_function.front().size(), 0.0);
    for (const auto& f : s.per_function)
        for (std::size_t c = 0; c < f.size(); ++c) s.rank_sum[c] += f[c];
    s.final_rank = order_ranks(s.rank_sum);
    return s;
}

} // namespace shrike::stats
