#pragma once

/// @file baselines.hpp
/// @brief Comparator optimizers run under the same iteration protocol as
/// SHOA: particle swarm, a real-coded genetic algorithm and uniform random
/// search.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "shrike/core.hpp"

namespace shrike::baselines {

enum class BaselineKind { pso, ga, random };

struct PsoParams {
    double c1 = 2.0;
    double c2 = 2.0;
    double inertia = 0.6;
    // r1, r2 ~ U[r_low, r_high]; r_low = 0 gives the canonical variant.
    double r_low = -1.0;
    double r_high = 1.0;
    std::size_t agents = 30;

    void validate() const {
        if (!(r_low < r_high)) throw std::invalid_argument("PsoParams: r_low must be below r_high");
        if (agents < 1) throw std::invalid_argument("PsoParams: agents must be >= 1");
    }
};

struct GaParams {
    double crossover_rate = 0.8; // arithmetic
    double mutation_rate = 0.05; // per-gene uniform reset
    std::size_t elitism = 1;
    std::size_t agents = 30;

    void validate() const {
        if (crossover_rate < 0 || crossover_rate > 1 || mutation_rate < 0 || mutation_rate > 1)
            throw std::invalid_argument("GaParams: rates must lie in [0, 1]");
        if (agents < 2) throw std::invalid_argument("GaParams: agents must be >= 2");
        if (elitism > agents) throw std::invalid_argument("GaParams: elitism exceeds population");
    }
};

struct RandomParams {
    std::size_t agents = 30;
};

struct BudgetOptions {
    std::size_t iterations = 500;
    std::uint64_t seed = 0;
    std::uint64_t max_evaluations = std::numeric_limits<std::uint64_t>::max();
};

namespace detail {

struct Agent {
    Position x;
    Fitness f;
};

class CurveRecorder {
  public:
    explicit CurveRecorder(std::size_t iterations) { curve_.reserve(iterations + 1); }

    void offer(const Position& x, const Fitness& f) { best_.offer(x, f); }
    void close(std::size_t iteration) { curve_.push_back({iteration, best_.fitness}); }

    RunResult finish(std::size_t iterations, std::uint64_t evaluations,
                     std::chrono::steady_clock::time_point start) {
        shrike::detail::pad_curve(curve_, iterations);
        RunResult r;
        r.best_position = best_.position;
        r.best_fitness = best_.fitness;
        r.curve = std::move(curve_);
        r.evaluations = evaluations;
        r.wall_time = std::chrono::steady_clock::now() - start;
        return r;
    }

  private:
    BestRecord best_;
    std::vector<CurvePoint> curve_;
};

inline void check_budget(const BudgetOptions& b) {
    if (b.iterations < 1) throw std::invalid_argument("baseline: iterations must be >= 1");
}

} // namespace detail

/// Global-best PSO. v <- w v + c1 r1 (pbest - x) + c2 r2 (gbest - x),
/// x <- clamp(x + v). Velocities start at zero and are not clamped;
/// personal and global bests are refreshed after each move.
inline RunResult run_pso(const Problem& problem, const BudgetOptions& budget, const PsoParams& params = {}) {
    detail::check_budget(budget);
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    RngStream rng(budget.seed);
    EvalCounter counter{0, budget.max_evaluations};
    const std::size_t dim = problem.dimension();

    std::vector<detail::Agent> swarm(params.agents), pbest(params.agents);
    std::vector<Position> velocity(params.agents, Position(dim, 0.0));
    detail::CurveRecorder rec(budget.iterations);
    BestRecord gbest;
    for (std::size_t a = 0; a < params.agents; ++a) {
        swarm[a].x = init_position(problem.bounds(), rng);
        swarm[a].f = evaluate(problem, swarm[a].x, counter, rng);
        pbest[a] = swarm[a];
        gbest.offer(swarm[a].x, swarm[a].f);
        rec.offer(swarm[a].x, swarm[a].f);
    }
    rec.close(0);

    for (std::size_t it = 1; it <= budget.iterations && !counter.exhausted(); ++it) {
        for (std::size_t a = 0; a < params.agents; ++a) {
            auto& x = swarm[a].x;
            auto& v = velocity[a];
            for (std::size_t d = 0; d < dim; ++d) {
                const double r1 = rng.uniform(params.r_low, params.r_high);
                const double r2 = rng.uniform(params.r_low, params.r_high);
                v[d] = params.inertia * v[d] + params.c1 * r1 * (pbest[a].x[d] - x[d]) +
                       params.c2 * r2 * (gbest.position[d] - x[d]);
                x[d] += v[d];
            }
            clamp_in_place(x, problem.bounds());
            swarm[a].f = evaluate(problem, x, counter, rng);
            if (swarm[a].f.better_than(pbest[a].f)) pbest[a] = swarm[a];
            gbest.offer(x, swarm[a].f);
            rec.offer(x, swarm[a].f);
        }
        rec.close(it);
    }
    return rec.finish(budget.iterations, counter.count, start);
}

/// Generational GA: rank-weighted roulette selection, arithmetic crossover
/// child = l a + (1 - l) b with l ~ U[0, 1], per-gene uniform-reset
/// mutation, elites copied unchanged.
inline RunResult run_ga(const Problem& problem, const BudgetOptions& budget, const GaParams& params = {}) {
    detail::check_budget(budget);
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    RngStream rng(budget.seed);
    EvalCounter counter{0, budget.max_evaluations};
    const std::size_t dim = problem.dimension();
    const std::size_t n = params.agents;
    const auto& bounds = problem.bounds();

    std::vector<detail::Agent> pop(n);
    detail::CurveRecorder rec(budget.iterations);
    for (auto& ag : pop) {
        ag.x = init_position(bounds, rng);
        ag.f = evaluate(problem, ag.x, counter, rng);
        rec.offer(ag.x, ag.f);
    }
    rec.close(0);

    // Rank weights: best gets n, worst gets 1.
    const double total_weight = static_cast<double>(n) * static_cast<double>(n + 1) / 2.0;
    std::vector<std::size_t> order(n);
    auto select = [&]() -> const detail::Agent& {
        double u = rng.uniform01() * total_weight;
        for (std::size_t p = 0; p < n; ++p) {
            u -= static_cast<double>(n - p);
            if (u < 0) return pop[order[p]];
        }
        return pop[order[n - 1]];
    };

    for (std::size_t gen = 1; gen <= budget.iterations && !counter.exhausted(); ++gen) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return pop[a].f.better_than(pop[b].f); });

        std::vector<detail::Agent> next;
        next.reserve(n);
        for (std::size_t e = 0; e < params.elitism; ++e) next.push_back(pop[order[e]]);
        while (next.size() < n) {
            const auto& a = select();
            const auto& b = select();
            detail::Agent child;
            child.x = a.x;
            if (rng.uniform01() < params.crossover_rate) {
                const double l = rng.uniform01();
                for (std::size_t d = 0; d < dim; ++d) child.x[d] = l * a.x[d] + (1.0 - l) * b.x[d];
            }
            for (std::size_t d = 0; d < dim; ++d)
                if (rng.uniform01() < params.mutation_rate)
                    child.x[d] = bounds.lower(d) + rng.uniform01() * (bounds.upper(d) - bounds.lower(d));
            clamp_in_place(child.x, bounds);
            child.f = evaluate(problem, child.x, counter, rng);
            rec.offer(child.x, child.f);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        rec.close(gen);
    }
    return rec.finish(budget.iterations, counter.count, start);
}

/// Uniform sampling: `agents` fresh points per iteration, plus one initial
/// batch for iteration 0.
inline RunResult run_random(const Problem& problem, const BudgetOptions& budget, const RandomParams& params = {}) {
    detail::check_budget(budget);
    if (params.agents < 1) throw std::invalid_argument("RandomParams: agents must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    RngStream rng(budget.seed);
    EvalCounter counter{0, budget.max_evaluations};
    detail::CurveRecorder rec(budget.iterations);
    for (std::size_t it = 0; it <= budget.iterations && !counter.exhausted(); ++it) {
        for (std::size_t a = 0; a < params.agents; ++a) {
            Position x = init_position(problem.bounds(), rng);
            rec.offer(x, evaluate(problem, x, counter, rng));
        }
        rec.close(it);
    }
    return rec.finish(budget.iterations, counter.count, start);
}

inline RunResult run_baseline(BaselineKind kind, const Problem& problem, std::size_t iterations, std::uint64_t seed) {
    const BudgetOptions budget{iterations, seed};
    switch (kind) {
    case BaselineKind::pso: return run_pso(problem, budget);
    case BaselineKind::ga: return run_ga(problem, budget);
    case BaselineKind::random: return run_random(problem, budget);
    }
    throw std::invalid_argument("run_baseline: unknown kind");
}

} // namespace shrike::baselines
