#pragma once

/// @file runner.hpp
/// @brief Seed derivation and execution of the (algorithm, problem, round)
/// matrix.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "shrike/baselines.hpp"
#include "shrike/core.hpp"
#include "shrike/harness/config.hpp"
#include "shrike/registry.hpp"
#include "shrike/rng.hpp"
#include "shrike/shoa.hpp"

namespace shrike::harness {

/// Packs a cell into 64 bits: algorithm slot (8 bits), registry index of
/// the problem (24 bits), round (32 bits). Injective for validated configs.
constexpr std::uint64_t cell_code(std::size_t algorithm, std::size_t problem, std::size_t round) noexcept {
    return (static_cast<std::uint64_t>(algorithm) << 56) | (static_cast<std::uint64_t>(problem & 0xFFFFFF) << 32) |
           static_cast<std::uint64_t>(round & 0xFFFFFFFF);
}

/// seed = mix64(base_seed + mix64(code)). mix64 is a bijection, so distinct
/// codes give distinct seeds for any base_seed.
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t code) noexcept {
    return mix64(base_seed + mix64(code));
}

struct Cell {
    std::size_t algorithm; // slot in ExperimentConfig::algorithms
    std::size_t problem;   // slot in ExperimentConfig::problems
    std::size_t round;
    std::uint64_t seed;
};

/// Cells in output order: algorithm, then problem, then round.
inline std::vector<Cell> enumerate_cells(const ExperimentConfig& cfg, const Registry& registry) {
    std::vector<Cell> cells;
    cells.reserve(cfg.algorithms.size() * cfg.problems.size() * cfg.rounds);
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a)
        for (std::size_t p = 0; p < cfg.problems.size(); ++p) {
            const std::size_t reg = registry.index_of(cfg.problems[p]);
            for (std::size_t r = 0; r < cfg.rounds; ++r)
                cells.push_back({a, p, r, derive_seed(cfg.base_seed, cell_code(a, reg, r))});
        }
    return cells;
}

struct ResultRow {
    std::string algorithm;
    std::string problem;
    std::size_t round = 0;
    std::uint64_t seed = 0;
    Fitness best_fitness;
    bool feasible = false;
    std::uint64_t evaluations = 0;
    double wall_ms = 0;
    Position best_position;
    std::optional<std::string> error; // set for cells that threw

    bool operator==(const ResultRow&) const = default;
};

struct CurveRow {
    std::string algorithm;
    std::string problem;
    std::size_t round = 0;
    std::size_t iteration = 0;
    Fitness global_best;

    bool operator==(const CurveRow&) const = default;
};

struct MatrixResult {
    std::vector<ResultRow> rows;
    std::vector<CurveRow> curves;
};

/// Runs one algorithm on one problem with an explicit seed.
inline RunResult run_algorithm(const AlgorithmSpec& spec, const Problem& problem, const ExperimentConfig& cfg,
                               std::uint64_t seed) {
    const std::uint64_t limit = cfg.budget == BudgetMode::evaluations
                                    ? cfg.max_evaluations
                                    : std::numeric_limits<std::uint64_t>::max();
    const baselines::BudgetOptions budget{cfg.iterations, seed, limit};
    switch (spec.kind) {
    case Algorithm::shoa: {
        RunConfig rc = spec.shoa;
        rc.max_iterations = cfg.iterations;
        rc.seed = seed;
        rc.max_evaluations = limit;
        return shoa::run(problem, rc);
    }
    case Algorithm::pso: return baselines::run_pso(problem, budget, spec.pso);
    case Algorithm::ga: return baselines::run_ga(problem, budget, spec.ga);
    case Algorithm::random: return baselines::run_random(problem, budget, spec.random);
    }
    throw std::logic_error("run_algorithm: unknown algorithm");
}

namespace detail {

struct CellOutput {
    ResultRow row;
    std::vector<CurveRow> curve;
};

inline CellOutput run_cell(const Cell& cell, const ExperimentConfig& cfg, const Registry& registry) {
    const auto& spec = cfg.algorithms[cell.algorithm];
    const auto& name = cfg.problems[cell.problem];
    CellOutput out;
    out.row.algorithm = spec.label;
    out.row.problem = name;
    out.row.round = cell.round;
    out.row.seed = cell.seed;
    try {
        const RunResult res = run_algorithm(spec, registry.get(name), cfg, cell.seed);
        out.row.best_fitness = res.best_fitness;
        out.row.feasible = res.best_fitness.feasible();
        out.row.evaluations = res.evaluations;
        out.row.wall_ms = cfg.record_wall_time ? res.wall_time.count() : 0.0;
        out.row.best_position = res.best_position;
        out.curve.reserve(res.curve.size());
        for (const auto& pt : res.curve) out.curve.push_back({spec.label, name, cell.round, pt.iteration, pt.best});
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        out.row.error = std::move(msg);
        out.curve.clear();
    }
    return out;
}

} // namespace detail

/// Executes every cell, `jobs` at a time. Output order is fixed by
/// enumerate_cells whatever the scheduling. A cell that throws becomes an
/// error row and contributes no curve.
inline MatrixResult run_matrix(const ExperimentConfig& cfg, const Registry& registry, std::size_t jobs = 1) {
    validate(cfg, registry);
    const auto cells = enumerate_cells(cfg, registry);
    std::vector<detail::CellOutput> outputs(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) outputs[i] = detail::run_cell(cells[i], cfg, registry);
    };
    jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(cells.size(), 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    MatrixResult result;
    result.rows.reserve(outputs.size());
    for (auto& o : outputs) {
        result.rows.push_back(std::move(o.row));
        for (auto& c : o.curve) result.curves.push_back(std::move(c));
    }
    return result;
}

/// Seeds that collide within the configured matrix, as pairs of cell
/// indices. Empty means every cell has its own stream.
inline std::vector<std::pair<std::size_t, std::size_t>> seed_collisions(const std::vector<Cell>& cells) {
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cells[a].seed < cells[b].seed; });
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i < order.size(); ++i)
        if (cells[order[i]].seed == cells[order[i - 1]].seed) out.emplace_back(order[i - 1], order[i]);
    return out;
}

} // namespace shrike::harness
