#pragma once

/// @file shoa.hpp
/// @brief Shrike Optimization Algorithm.
///
/// The population is a set of nests. Each nest holds a male parent (the
/// fitter of the two), a female parent and, after breeding, B nestlings.
/// One iteration is, per nest:
///
///   1. every k-th iteration (including the first) the nest is pruned to its
///      two best birds and breeds B new nestlings;
///   2. parent roles are re-read by fitness;
///   3. parents feed themselves (greedy);
///   4. each nestling is fed by the male (greedy), failing that by the female
///      (greedy), failing that it explores (accepted unconditionally).
///
/// Random draws are consumed nest-major, bird-minor, dimension-minor, so a
/// run is a pure function of (problem, config, seed).
///
/// Cost: O(N * (2 + B) * T * D) arithmetic plus at most N * (2 + 3B)
/// objective calls per iteration and N * B more on regeneration iterations.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "shrike/core.hpp"

namespace shrike::shoa {

enum class FeedMode { self, male, female };

/// Natural feeding factor r_i = exp(-2 (i/D) t / T_max) for the 1-based
/// dimension index i. Lies in [exp(-2), 1] and decays with t.
inline double feed_factor(std::size_t i, std::size_t dim, std::size_t t, std::size_t t_max) {
    if (i < 1 || i > dim) throw std::out_of_range("feed_factor: dimension index outside 1..D");
    if (t > t_max) throw std::out_of_range("feed_factor: iteration beyond T_max");
    const double x = static_cast<double>(i) / static_cast<double>(dim);
    return std::exp(-2.0 * x * static_cast<double>(t) / static_cast<double>(t_max));
}

inline std::vector<double> feed_factors(std::size_t dim, std::size_t t, std::size_t t_max) {
    std::vector<double> r(dim);
    for (std::size_t d = 0; d < dim; ++d) r[d] = feed_factor(d + 1, dim, t, t_max);
    return r;
}

namespace detail {

inline void record(Nest& nest, const Bird& bird) { nest.local_best.offer(bird.position, bird.fitness); }

inline Bird& find_role(Nest& nest, Role role) {
    for (auto& b : nest.birds)
        if (b.role == role) return b;
    throw std::logic_error("nest is missing a parent role");
}

/// Male is the fitter parent. Ties keep collection order.
inline void assign_parent_roles(Bird& first, Bird& second) {
    if (second.fitness.better_than(first.fitness)) {
        first.role = Role::female_parent;
        second.role = Role::male_parent;
    } else {
        first.role = Role::male_parent;
        second.role = Role::female_parent;
    }
}

} // namespace detail

/// Appends `count` nestlings bred from the two parents:
/// egg = (F - M) + r, nestling = F + egg, r_d ~ U[-1, 1].
inline void generate_nestlings(Nest& nest, std::size_t count, RngStream& rng, const Problem& problem,
                               EvalCounter& counter) {
    const Bird male = detail::find_role(nest, Role::male_parent);
    const Bird female = detail::find_role(nest, Role::female_parent);
    const std::size_t dim = problem.dimension();
    nest.birds.reserve(nest.birds.size() + count);
    for (std::size_t j = 0; j < count; ++j) {
        Bird chick;
        chick.role = Role::nestling;
        chick.position.resize(dim);
        for (std::size_t d = 0; d < dim; ++d) {
            const double egg = (female.position[d] - male.position[d]) + rng.uniform(-1.0, 1.0);
            chick.position[d] = female.position[d] + egg;
        }
        clamp_in_place(chick.position, problem.bounds());
        chick.fitness = evaluate(problem, chick.position, counter, rng);
        nest.birds.push_back(std::move(chick));
        detail::record(nest, nest.birds.back());
    }
}

/// Proposed next position bird + food for one feeding mode, clamped.
///   self:   food = bird * r
///   male:   food = r * (bird - male) + bird
///   female: food = r' * (bird - female) + sin(alpha), r'_d ~ U[-1, 1]
/// `factors` holds r_d for the current iteration.
inline Position candidate_position(const Bird& bird, FeedMode mode, const Bird& male, const Bird& female,
                                   std::span<const double> factors, double alpha, RngStream& rng,
                                   const Bounds& bounds) {
    const bool parent = bird.is_parent();
    if ((mode == FeedMode::self) != parent)
        throw std::logic_error("candidate_position: self feeding is for parents, male/female for nestlings");
    const std::size_t dim = bird.position.size();
    Position next(dim);
    switch (mode) {
    case FeedMode::self:
        for (std::size_t d = 0; d < dim; ++d) next[d] = bird.position[d] + bird.position[d] * factors[d];
        break;
    case FeedMode::male:
        for (std::size_t d = 0; d < dim; ++d) {
            const double food = factors[d] * (bird.position[d] - male.position[d]) + bird.position[d];
            next[d] = bird.position[d] + food;
        }
        break;
    case FeedMode::female: {
        const double lift = std::sin(alpha);
        for (std::size_t d = 0; d < dim; ++d) {
            const double food = rng.uniform(-1.0, 1.0) * (bird.position[d] - female.position[d]) + lift;
            next[d] = bird.position[d] + food;
        }
        break;
    }
    }
    clamp_in_place(next, bounds);
    return next;
}

/// Convenience overload computing the feeding factors for iteration t.
inline Position candidate_position(const Bird& bird, FeedMode mode, const Bird& male, const Bird& female,
                                   std::size_t t, const RunConfig& cfg, RngStream& rng,
                                   const Bounds& bounds) {
    const auto r = feed_factors(bird.position.size(), t, cfg.max_iterations);
    return candidate_position(bird, mode, male, female, r, cfg.alpha, rng, bounds);
}

/// Random divergent move: bird + (r'' * bird + sin(a)), r''_d ~ U[-1, 1],
/// a ~ U[0, D]. The result replaces the bird whatever its fitness.
inline Bird explore(const Bird& bird, RngStream& rng, const Problem& problem, EvalCounter& counter) {
    const std::size_t dim = bird.position.size();
    Bird out = bird;
    for (std::size_t d = 0; d < dim; ++d) out.position[d] = bird.position[d] + rng.uniform(-1.0, 1.0) * bird.position[d];
    const double lift = std::sin(rng.uniform(0.0, static_cast<double>(dim)));
    for (auto& v : out.position) v += lift;
    clamp_in_place(out.position, problem.bounds());
    out.fitness = evaluate(problem, out.position, counter, rng);
    return out;
}

/// Prunes the nest to its two best birds (stable on ties), best first,
/// assigns parent roles and breeds a fresh brood.
inline void regenerate_nest(Nest& nest, const RunConfig& cfg, RngStream& rng, const Problem& problem,
                            EvalCounter& counter) {
    if (nest.birds.size() < 2) throw std::logic_error("regenerate_nest: a nest needs two birds");
    std::vector<std::size_t> order(nest.birds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return nest.birds[a].fitness.better_than(nest.birds[b].fitness);
    });
    std::vector<Bird> kept{std::move(nest.birds[order[0]]), std::move(nest.birds[order[1]])};
    kept[0].role = Role::male_parent;
    kept[1].role = Role::female_parent;
    nest.birds = std::move(kept);
    generate_nestlings(nest, cfg.nestlings, rng, problem, counter);
}

/// Builds N nests of two random parents each and records the iteration-0
/// global best.
inline SwarmState initialize(const Problem& problem, const RunConfig& cfg, RngStream& rng) {
    cfg.validate();
    SwarmState state;
    state.evaluations.limit = cfg.max_evaluations;
    state.nests.resize(cfg.nests);
    for (auto& nest : state.nests) {
        for (int p = 0; p < 2; ++p) {
            Bird parent;
            parent.position = init_position(problem.bounds(), rng);
            parent.fitness = evaluate(problem, parent.position, state.evaluations, rng);
            nest.birds.push_back(std::move(parent));
        }
        detail::assign_parent_roles(nest.birds[0], nest.birds[1]);
        for (const auto& b : nest.birds) detail::record(nest, b);
        state.global_best.offer(nest.local_best.position, nest.local_best.fitness);
    }
    return state;
}

namespace detail {
/// Greedy acceptance: the candidate replaces the bird iff strictly better.
inline bool try_feed(Bird& bird, Position candidate, const Problem& problem, EvalCounter& counter,
                     RngStream& rng) {
    const Fitness f = evaluate(problem, candidate, counter, rng);
    if (!f.better_than(bird.fitness)) return false;
    bird.position = std::move(candidate);
    bird.fitness = f;
    return true;
}
} // namespace detail

/// One full iteration over every nest.
inline void step(SwarmState& state, const Problem& problem, const RunConfig& cfg, RngStream& rng) {
    const std::size_t t = state.iteration;
    if (t >= cfg.max_iterations) throw std::logic_error("step: iteration limit reached");
    const auto factors = feed_factors(problem.dimension(), t, cfg.max_iterations);
    const bool regenerate = t % cfg.regeneration_period == 0;
    auto& counter = state.evaluations;

    for (auto& nest : state.nests) {
        if (regenerate) regenerate_nest(nest, cfg, rng, problem, counter);

        Bird* male = &detail::find_role(nest, Role::male_parent);
        Bird* female = &detail::find_role(nest, Role::female_parent);
        if (female->fitness.better_than(male->fitness)) {
            std::swap(male->role, female->role);
            std::swap(male, female);
        }

        for (auto& bird : nest.birds) {
            if (bird.is_parent()) {
                detail::try_feed(bird, candidate_position(bird, FeedMode::self, *male, *female, factors,
                                                          cfg.alpha, rng, problem.bounds()),
                                 problem, counter, rng);
            } else if (!detail::try_feed(bird,
                                         candidate_position(bird, FeedMode::male, *male, *female, factors,
                                                            cfg.alpha, rng, problem.bounds()),
                                         problem, counter, rng) &&
                       !detail::try_feed(bird,
                                         candidate_position(bird, FeedMode::female, *male, *female,
                                                            factors, cfg.alpha, rng, problem.bounds()),
                                         problem, counter, rng)) {
                bird = explore(bird, rng, problem, counter);
            }
            detail::record(nest, bird);
        }
        state.global_best.offer(nest.local_best.position, nest.local_best.fitness);
    }
    state.iteration = t + 1;
}

/// Full run: initialization, then T_max iterations. The curve holds the
/// global best after initialization and after every iteration.
inline RunResult run(const Problem& problem, const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RngStream rng(cfg.seed);
    SwarmState state = initialize(problem, cfg, rng);

    RunResult result;
    result.curve.reserve(cfg.max_iterations + 1);
    result.curve.push_back({0, state.global_best.fitness});
    while (state.iteration < cfg.max_iterations && !state.evaluations.exhausted()) {
        step(state, problem, cfg, rng);
        result.curve.push_back({state.iteration, state.global_best.fitness});
    }
    shrike::detail::pad_curve(result.curve, cfg.max_iterations);

    result.best_position = state.global_best.position;
    result.best_fitness = state.global_best.fitness;
    result.evaluations = state.evaluations.count;
    result.wall_time = std::chrono::steady_clock::now() - start;
    return result;
}

} // namespace shrike::shoa
