#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "shrike/rng.hpp"
#include "shrike/stats.hpp"

using namespace shrike;
using namespace shrike::stats;

namespace {

// Enumerates every assignment of the pooled ranks to sample a.
double brute_force_p(const std::vector<double>& a, const std::vector<double>& b, Alternative alt) {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    const auto ranks = average_ranks(pooled);
    const std::size_t n = pooled.size(), k = a.size();
    double w = 0;
    for (std::size_t i = 0; i < k; ++i) w += ranks[i];
    const double mu = k * (n + 1) / 2.0;
    std::size_t total = 0, hit = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) s += ranks[i];
        ++total;
        bool extreme = false;
        if (alt == Alternative::two_sided) extreme = std::abs(s - mu) >= std::abs(w - mu) - 1e-9;
        if (alt == Alternative::less) extreme = s <= w + 1e-9;
        if (alt == Alternative::greater) extreme = s >= w - 1e-9;
        hit += extreme;
    }
    return std::min(1.0, double(hit) / double(total));
}

std::vector<double> sample(RngStream& rng, std::size_t n, double shift, bool ties) {
    std::normal_distribution<double> g(shift, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = ties ? std::round(2 * g(rng)) / 2 : g(rng);
    return v;
}

} // namespace

TEST(MeanStd, SampleDeviation) {
    const std::vector<double> v{2, 4, 4, 4, 5, 5, 7, 9};
    const auto m = mean_std(v);
    EXPECT_DOUBLE_EQ(m.mean, 5.0);
    EXPECT_NEAR(m.std, std::sqrt(32.0 / 7.0), 1e-12);
    EXPECT_THROW(mean_std(std::vector<double>{1.0}), std::invalid_argument);
}

TEST(AverageRanks, TiesShareTheMean) {
    const std::vector<double> v{3, 1, 3, 2, 3};
    EXPECT_EQ(average_ranks(v), (std::vector<double>{4, 1, 4, 2, 4}));
}

TEST(RankSum, ExactMatchesEnumeration) {
    RngStream rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t na = 2 + trial % 5, nb = 2 + (trial / 5) % 6;
        const bool ties = trial % 3 == 0;
        const auto a = sample(rng, na, 0.4, ties), b = sample(rng, nb, 0.0, ties);
        for (auto alt : {Alternative::two_sided, Alternative::less, Alternative::greater}) {
            const auto r = wilcoxon_rank_sum(a, b, alt, Method::exact);
            ASSERT_TRUE(r.exact);
            const bool constant = std::all_of(a.begin(), a.end(), [&](double x) { return x == a[0]; }) &&
                                  std::all_of(b.begin(), b.end(), [&](double x) { return x == a[0]; });
            if (constant) continue;
            ASSERT_NEAR(r.p, brute_force_p(a, b, alt), 1e-12) << "trial " << trial;
        }
    }
}

TEST(RankSum, TextbookExample) {
    // W = 1 + 2 + 3 for a fully below b with n = m = 3: p = 2 / 20.
    const std::vector<double> a{1, 2, 3}, b{4, 5, 6};
    const auto r = wilcoxon_rank_sum(a, b);
    EXPECT_DOUBLE_EQ(r.statistic, 6.0);
    EXPECT_NEAR(r.p, 0.1, 1e-15);
    EXPECT_NEAR(wilcoxon_rank_sum(a, b, Alternative::less).p, 0.05, 1e-15);
}

TEST(RankSum, Symmetric) {
    RngStream rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto a = sample(rng, 4 + i % 20, 0.3, i % 2), b = sample(rng, 3 + i % 17, 0, i % 2);
        ASSERT_NEAR(wilcoxon_rank_sum(a, b).p, wilcoxon_rank_sum(b, a).p, 1e-12);
        ASSERT_NEAR(wilcoxon_rank_sum(a, b, Alternative::less).p, wilcoxon_rank_sum(b, a, Alternative::greater).p,
                    1e-12);
    }
}

TEST(RankSum, TranslationInvariant) {
    RngStream rng(6);
    for (int i = 0; i < 200; ++i) {
        auto a = sample(rng, 5 + i % 25, 0.5, false), b = sample(rng, 5 + i % 25, 0, false);
        const double p = wilcoxon_rank_sum(a, b).p;
        const double c = std::ldexp(1.0, i % 7); // exact in binary
        for (auto& x : a) x += c;
        for (auto& x : b) x += c;
        ASSERT_NEAR(wilcoxon_rank_sum(a, b).p, p, 1e-12);
    }
}

TEST(RankSum, NormalApproximationCloseToExactAtTen) {
    RngStream rng(7);
    for (int i = 0; i < 1000; ++i) {
        const auto a = sample(rng, 10, 0.5, false), b = sample(rng, 10, 0, false);
        const double pe = wilcoxon_rank_sum(a, b, Alternative::two_sided, Method::exact).p;
        const double pn = wilcoxon_rank_sum(a, b, Alternative::two_sided, Method::normal).p;
        ASSERT_NEAR(pe, pn, 0.02) << "pair " << i;
    }
}

TEST(RankSum, CompleteSeparation) {
    std::vector<double> a(30), b(30);
    for (int i = 0; i < 30; ++i) a[i] = i, b[i] = 100 + i;
    const auto r = wilcoxon_rank_sum(a, b);
    EXPECT_FALSE(r.exact);
    EXPECT_LT(r.p, 1e-6);
    EXPECT_LT(wilcoxon_rank_sum(a, b, Alternative::less).p, 1e-6);
    EXPECT_GT(wilcoxon_rank_sum(a, b, Alternative::greater).p, 0.999);
}

TEST(RankSum, IdenticalValues) {
    const std::vector<double> a(12, 3.5), b(30, 3.5);
    EXPECT_EQ(wilcoxon_rank_sum(a, b).p, 1.0);
    EXPECT_EQ(wilcoxon_rank_sum(a, b, Alternative::two_sided, Method::exact).p, 1.0);
}

TEST(RankSum, RejectsTinySamples) {
    const std::vector<double> one{1.0}, two{1.0, 2.0};
    EXPECT_THROW(wilcoxon_rank_sum(one, two), std::invalid_argument);
    EXPECT_THROW(wilcoxon_rank_sum(two, one), std::invalid_argument);
}

TEST(RankSum, PValueInUnitInterval) {
    RngStream rng(9);
    for (int i = 0; i < 500; ++i) {
        const auto a = sample(rng, 2 + i % 40, 0.1 * (i % 9), i % 2), b = sample(rng, 2 + i % 33, 0, i % 2);
        for (auto alt : {Alternative::two_sided, Alternative::less, Alternative::greater}) {
            const double p = wilcoxon_rank_sum(a, b, alt).p;
            ASSERT_GE(p, 0.0);
            ASSERT_LE(p, 1.0);
        }
    }
}

TEST(Friedman, RowRanksSumToTriangle) {
    RngStream rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t algs = 2 + t % 6;
        RankMatrix m(5 + t % 10, std::vector<double>(algs));
        for (auto& row : m)
            for (auto& v : row) v = std::round(rng.uniform(0, 5));
        for (const auto& row : row_ranks(m)) {
            double s = 0;
            for (double r : row) s += r;
            ASSERT_DOUBLE_EQ(s, algs * (algs + 1) / 2.0);
        }
        const auto f = friedman(m);
        double s = 0;
        for (double r : f.mean_ranks) s += r;
        ASSERT_NEAR(s, algs * (algs + 1) / 2.0, 1e-9);
    }
}

TEST(Friedman, InvariantUnderMonotoneTransform) {
    RngStream rng(14);
    RankMatrix m(20, std::vector<double>(4));
    for (auto& row : m)
        for (auto& v : row) v = rng.uniform(0.1, 50);
    RankMatrix t = m;
    for (auto& row : t)
        for (auto& v : row) v = std::log(v) * 3 + 7;
    EXPECT_EQ(friedman(m).mean_ranks, friedman(t).mean_ranks);
    EXPECT_EQ(friedman(m).final_rank, friedman(t).final_rank);
}

TEST(Friedman, StrictOrder) {
    const RankMatrix m{{1, 2, 3}, {0.1, 0.2, 0.3}, {-5, 4, 9}};
    const auto r = friedman(m);
    EXPECT_EQ(r.mean_ranks, (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(r.final_rank, (std::vector<std::size_t>{1, 2, 3}));
    const auto s = friedman_summary({m, m});
    EXPECT_EQ(s.rank_sum, (std::vector<double>{2, 4, 6}));
    EXPECT_EQ(s.final_rank, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Friedman, TiesShareLowerRank) {
    const RankMatrix m{{1, 1, 3}};
    const auto r = friedman(m);
    EXPECT_EQ(r.mean_ranks, (std::vector<double>{1.5, 1.5, 3}));
    EXPECT_EQ(r.final_rank, (std::vector<std::size_t>{1, 1, 3}));
}

TEST(Friedman, Rejections) {
    EXPECT_THROW(friedman(RankMatrix{{1}, {2}}), std::invalid_argument);
    EXPECT_THROW(friedman(RankMatrix{}), std::invalid_argument);
    EXPECT_THROW(friedman(RankMatrix{{1, 2}, {1}}), std::invalid_argument);
    EXPECT_THROW(friedman_summary({}), std::invalid_argument);
    EXPECT_THROW(friedman_summary({RankMatrix{{1, 2}}, RankMatrix{{1, 2, 3}}}), std::invalid_argument);
}
