#include <gtest/gtest.h>

#include "shrike/baselines.hpp"
#include "shrike/benchmarks.hpp"

using namespace shrike;
using namespace shrike::baselines;

namespace {

Problem bowl(std::size_t dim = 4) {
    return Problem("bowl", Bounds::uniform(dim, -5, 5), [](std::span<const double> x, RngStream&) {
        double s = 0;
        for (double v : x) s += (v - 1) * (v - 1);
        return s;
    });
}

void expect_monotone(const RunResult& r, std::size_t iterations) {
    ASSERT_EQ(r.curve.size(), iterations + 1);
    for (std::size_t i = 1; i < r.curve.size(); ++i) {
        ASSERT_EQ(r.curve[i].iteration, i);
        ASSERT_FALSE(r.curve[i - 1].best.better_than(r.curve[i].best));
    }
    EXPECT_EQ(r.curve.back().best, r.best_fitness);
}

} // namespace

TEST(Pso, FirstIterationMatchesVelocityFormula) {
    const Problem p = bowl(2);
    PsoParams params;
    params.agents = 3;
    const auto res = run_pso(p, {1, 17}, params);

    RngStream rng(17);
    EvalCounter c;
    std::vector<Position> x(3);
    std::vector<double> f(3);
    for (int a = 0; a < 3; ++a) {
        x[a] = init_position(p.bounds(), rng);
        f[a] = evaluate(p, x[a], c, rng).value();
    }
    const std::size_t g0 = std::min_element(f.begin(), f.end()) - f.begin();
    Position gbest = x[g0];
    double gval = f[g0];
    for (int a = 0; a < 3; ++a) {
        Position nx = x[a];
        for (int d = 0; d < 2; ++d) {
            const double r1 = rng.uniform(-1, 1), r2 = rng.uniform(-1, 1);
            // pbest = x and v = 0 before the first move.
            nx[d] += 2.0 * r1 * (x[a][d] - x[a][d]) + 2.0 * r2 * (gbest[d] - x[a][d]);
        }
        nx = clamp(nx, p.bounds());
        const double v = evaluate(p, nx, c, rng).value();
        if (v < gval) {
            gval = v;
            gbest = nx;
        }
    }
    EXPECT_EQ(res.best_fitness.value(), gval);
    EXPECT_EQ(res.best_position, gbest);
    EXPECT_EQ(res.evaluations, 6u);
}

TEST(Pso, CanonicalConvergesOnABowl) {
    PsoParams params;
    params.r_low = 0;
    const auto res = run_pso(bowl(), {200, 3}, params);
    expect_monotone(res, 200);
    EXPECT_LT(res.best_fitness.value(), 1e-6);
    EXPECT_EQ(res.evaluations, 30u * 201u);
}

TEST(Pso, DefaultDrawsImproveOnABowl) {
    const auto res = run_pso(bowl(), {200, 3});
    expect_monotone(res, 200);
    EXPECT_LT(res.best_fitness.value(), res.curve.front().best.value());
    EXPECT_EQ(res.evaluations, 30u * 201u);
}

TEST(Pso, RejectsEmptyDrawRange) {
    PsoParams params;
    params.r_low = params.r_high = 1;
    EXPECT_THROW(run_pso(bowl(), {10, 0}, params), std::invalid_argument);
}

TEST(Ga, ElitismKeepsTheCurveMonotone) {
    const auto res = run_ga(bowl(), {150, 9});
    expect_monotone(res, 150);
    EXPECT_LT(res.best_fitness.value(), 0.5);
    EXPECT_EQ(res.evaluations, 30u + 150u * 29u);
}

TEST(Ga, ValidatesParameters) {
    GaParams g;
    g.mutation_rate = 1.5;
    EXPECT_THROW(run_ga(bowl(), {10, 0}, g), std::invalid_argument);
    g = {};
    g.elitism = 31;
    EXPECT_THROW(run_ga(bowl(), {10, 0}, g), std::invalid_argument);
}

TEST(RandomSearch, SamplesAnInitialBatchPlusOnePerIteration) {
    const auto res = run_random(bowl(), {40, 2});
    expect_monotone(res, 40);
    EXPECT_EQ(res.evaluations, 30u * 41u);
}

TEST(RandomSearch, BestIsTheMinimumOfReplayedSamples) {
    const Problem p = bowl(3);
    const auto res = run_random(p, {5, 123}, {4});
    RngStream rng(123);
    double best = 1e300;
    for (int i = 0; i < 24; ++i) {
        Position x = init_position(p.bounds(), rng);
        EvalCounter c;
        best = std::min(best, evaluate(p, x, c, rng).value());
    }
    EXPECT_EQ(res.best_fitness.value(), best);
}

TEST(Baselines, DeterministicForFixedSeed) {
    const auto f7 = bench::make_shifted(bench::classic_shifted_specs(10)[6]);
    for (auto kind : {BaselineKind::pso, BaselineKind::ga, BaselineKind::random}) {
        const auto a = run_baseline(kind, f7, 30, 77);
        const auto b = run_baseline(kind, f7, 30, 77);
        EXPECT_EQ(a.best_position, b.best_position);
        EXPECT_EQ(a.best_fitness.value(), b.best_fitness.value());
    }
}

TEST(Baselines, EvaluationBudgetPadsTheCurve) {
    BudgetOptions b{100, 5, 300};
    const auto res = run_pso(bowl(), b);
    EXPECT_EQ(res.evaluations, 300u);
    EXPECT_EQ(res.curve.size(), 101u);
    EXPECT_EQ(res.curve.back().best, res.curve[9].best);
}
