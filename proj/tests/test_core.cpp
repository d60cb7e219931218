#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "shrike/core.hpp"

using namespace shrike;

namespace {

Problem sphere(std::size_t dim = 3) {
    return Problem("sphere", Bounds::uniform(dim, -5, 5), [](std::span<const double> x, RngStream&) {
        double s = 0;
        for (double v : x) s += v * v;
        return s;
    });
}

} // namespace

TEST(Bounds, RejectsEmptyOrInvertedBoxes) {
    EXPECT_THROW(Bounds({}, {}), std::invalid_argument);
    EXPECT_THROW(Bounds({0, 1}, {1}), std::invalid_argument);
    EXPECT_THROW(Bounds({1}, {1}), std::invalid_argument);
    EXPECT_NO_THROW(Bounds({-1, 0}, {1, 2}));
}

TEST(Bounds, ContainsIsInclusive) {
    const auto b = Bounds::uniform(2, -1, 1);
    EXPECT_TRUE(b.contains(std::vector<double>{-1, 1}));
    EXPECT_FALSE(b.strictly_contains(std::vector<double>{-1, 0}));
    EXPECT_FALSE(b.contains(std::vector<double>{0, 1.0000001}));
    EXPECT_FALSE(b.contains(std::vector<double>{0}));
    EXPECT_FALSE(b.contains(std::vector<double>{0, std::nan("")}));
}

TEST(Fitness, InfeasibleRanksBelowEveryValue) {
    const Fitness inf = Fitness::infeasible();
    EXPECT_FALSE(inf.feasible());
    EXPECT_TRUE(Fitness(1e308).better_than(inf));
    EXPECT_FALSE(inf.better_than(Fitness(1e308)));
    EXPECT_FALSE(inf.better_than(Fitness::infeasible()));
    EXPECT_EQ(inf, Fitness::infeasible());
    EXPECT_TRUE(Fitness(-3).better_than(Fitness(2)));
    EXPECT_FALSE(Fitness(2).better_than(Fitness(2)));
    EXPECT_EQ(inf.value(), std::numeric_limits<double>::infinity());
}

TEST(Fitness, OrderingIsTotalOnRandomMixtures) {
    RngStream rng(11);
    for (int i = 0; i < 2000; ++i) {
        auto pick = [&] { return rng.uniform01() < 0.2 ? Fitness::infeasible() : Fitness(rng.uniform(-10, 10)); };
        const Fitness a = pick(), b = pick(), c = pick();
        const int lt = a.better_than(b) + b.better_than(a) + (a == b);
        ASSERT_EQ(lt, 1);
        if (a.better_than(b) && b.better_than(c)) ASSERT_TRUE(a.better_than(c));
    }
}

TEST(InitPosition, DrawsInsideBoundsInDimensionOrder) {
    const Bounds b({0, 10, -4}, {1, 20, -2});
    RngStream r1(5), r2(5);
    for (int k = 0; k < 1000; ++k) {
        const Position p = init_position(b, r1);
        ASSERT_TRUE(b.contains(p));
        for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(p[i], b.lower(i) + r2.uniform01() * (b.upper(i) - b.lower(i)));
    }
}

TEST(Clamp, ProjectsOntoBox) {
    const auto b = Bounds::uniform(3, -1, 1);
    EXPECT_EQ(clamp({-5, 0.5, 9}, b), (Position{-1, 0.5, 1}));
    EXPECT_THROW(clamp({0, 0}, b), std::invalid_argument);
}

TEST(Evaluate, CountsOneCallPerFeasibleEvaluation) {
    const auto p = sphere();
    EvalCounter c;
    RngStream rng(0);
    EXPECT_EQ(evaluate(p, std::vector<double>{1, 2, 3}, c, rng), Fitness(14));
    EXPECT_EQ(c.count, 1u);
}

TEST(Evaluate, OutOfBoundsIsALogicError) {
    const auto p = sphere();
    EvalCounter c;
    RngStream rng(0);
    EXPECT_THROW(evaluate(p, std::vector<double>{6, 0, 0}, c, rng), std::logic_error);
    EXPECT_EQ(c.count, 0u);
}

TEST(Evaluate, DeathPenaltySkipsTheObjective) {
    int calls = 0;
    Problem p("c", Bounds::uniform(1, -1, 1),
              [&](std::span<const double> x, RngStream&) {
                  ++calls;
                  return x[0];
              },
              {{"nonneg", [](std::span<const double> x) { return x[0] >= 0; }}});
    EvalCounter c;
    RngStream rng(0);
    EXPECT_EQ(evaluate(p, std::vector<double>{-0.5}, c, rng), Fitness::infeasible());
    EXPECT_EQ(calls, 0);
    EXPECT_EQ(c.count, 0u);
    EXPECT_EQ(evaluate(p, std::vector<double>{0.5}, c, rng), Fitness(0.5));
    EXPECT_EQ(calls, 1);
}

TEST(Evaluate, NonFiniteValueNamesProblemAndPosition) {
    Problem p("blowup", Bounds::uniform(1, -1, 1), [](std::span<const double>, RngStream&) {
        return std::numeric_limits<double>::quiet_NaN();
    });
    EvalCounter c;
    RngStream rng(0);
    try {
        evaluate(p, std::vector<double>{0.25}, c, rng);
        FAIL() << "expected EvaluationError";
    } catch (const EvaluationError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("blowup"), std::string::npos);
        EXPECT_NE(msg.find("0.25"), std::string::npos);
    }
}

TEST(BestRecord, AcceptsOnlyStrictImprovement) {
    BestRecord r;
    EXPECT_TRUE(r.offer(std::vector<double>{1}, Fitness::infeasible()));
    EXPECT_TRUE(r.offer(std::vector<double>{2}, Fitness(5)));
    EXPECT_FALSE(r.offer(std::vector<double>{3}, Fitness(5)));
    EXPECT_FALSE(r.offer(std::vector<double>{4}, Fitness::infeasible()));
    EXPECT_TRUE(r.offer(std::vector<double>{5}, Fitness(4)));
    EXPECT_EQ(r.position, (Position{5}));
}

TEST(RunConfig, ValidatesRanges) {
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    c.regeneration_period = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.regeneration_period = 501;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.nests = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}
