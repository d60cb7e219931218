#pragma once

/// @file engineering.hpp
/// @brief Gear train, three-bar truss, antenna array and FM sound-wave
/// design problems. Constrained problems use the death penalty.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shrike/core.hpp"

namespace shrike::eng {

/// Attaches `constraints` to `problem`. Any violated constraint makes the
/// point INFEASIBLE and the objective is not evaluated there. With an empty
/// list the problem passes through unchanged.
inline Problem apply_death_penalty(const Problem& problem, std::vector<Constraint> constraints) {
    std::vector<Constraint> all = problem.constraints();
    for (auto& c : constraints) all.push_back(std::move(c));
    const Problem base = problem;
    Problem out(problem.id(), problem.bounds(),
                [base](std::span<const double> x, RngStream& rng) { return base.raw_objective(x, rng); },
                std::move(all), problem.deterministic(), problem.known_min());
    if (problem.known_argmin()) out.set_known_argmin(*problem.known_argmin());
    return out;
}

// ---------------------------------------------------------------------------
// Gear train

constexpr double kGearTargetRatio = 1.0 / 6.931;
constexpr double kGearTeethMin = 12.0;
constexpr double kGearTeethMax = 60.0;

struct GearTrainVars {
    double a, b, c, d;
};

inline double gear_ratio(const GearTrainVars& v) { return (v.a * v.b) / (v.c * v.d); }

inline double gear_train(const GearTrainVars& v) {
    const double e = kGearTargetRatio - gear_ratio(v);
    return e * e;
}

struct GearRoundingReport {
    std::array<int, 4> teeth;
    double ratio;
    double error;
};

/// Rounds a continuous solution to whole teeth (clamped to [12, 60]).
inline GearRoundingReport gear_rounding_report(std::span<const double> x) {
    GearRoundingReport r{};
    for (std::size_t i = 0; i < 4; ++i)
        r.teeth[i] = static_cast<int>(std::lround(std::clamp(x[i], kGearTeethMin, kGearTeethMax)));
    const GearTrainVars v{double(r.teeth[0]), double(r.teeth[1]), double(r.teeth[2]), double(r.teeth[3])};
    r.ratio = gear_ratio(v);
    r.error = gear_train(v);
    return r;
}

inline Problem make_gear_train() {
    ObjectiveFn fn = [](std::span<const double> x, RngStream&) { return gear_train({x[0], x[1], x[2], x[3]}); };
    return Problem("gear_train", Bounds::uniform(4, kGearTeethMin, kGearTeethMax), std::move(fn), {}, true, 0.0);
}

// ---------------------------------------------------------------------------
// Three-bar truss

struct TrussVars {
    double x1, x2;
};

struct TrussConstants {
    double length = 100.0; // cm
    double load = 2.0;     // kN/cm^2
    double stress = 2.0;   // kN/cm^2
};

inline double truss_weight(const TrussVars& v, const TrussConstants& k = {}) {
    return (2.0 * std::numbers::sqrt2 * v.x1 + v.x2) * k.length;
}

/// Stress constraints C1..C3 (feasible iff <= 0). A vanishing denominator
/// yields +inf, i.e. violated.
inline std::array<double, 3> truss_constraints(const TrussVars& v, const TrussConstants& k = {}) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double r2 = std::numbers::sqrt2;
    const double den12 = r2 * v.x1 * v.x1 + 2.0 * v.x1 * v.x2;
    const double den3 = r2 * v.x2 + v.x1;
    const double c1 = den12 > 0 ? (r2 * v.x1 + v.x2) / den12 * k.load - k.stress : inf;
    const double c2 = den12 > 0 ? v.x2 / den12 * k.load - k.stress : inf;
    const double c3 = den3 > 0 ? 1.0 / den3 * k.load - k.stress : inf;
    return {c1, c2, c3};
}

inline bool truss_feasible(const TrussVars& v, const TrussConstants& k = {}) {
    if (!(v.x1 >= 0 && v.x1 <= 1 && v.x2 >= 0 && v.x2 <= 1)) return false;
    for (double c : truss_constraints(v, k))
        if (!(c <= 0)) return false;
    return true;
}

inline Fitness three_bar_truss(const TrussVars& v, const TrussConstants& k = {}) {
    return truss_feasible(v, k) ? Fitness(truss_weight(v, k)) : Fitness::infeasible();
}

inline Problem make_three_bar_truss(const TrussConstants& k = {}) {
    ObjectiveFn fn = [k](std::span<const double> x, RngStream&) { return truss_weight({x[0], x[1]}, k); };
    Problem raw("three_bar_truss", Bounds::uniform(2, 0.0, 1.0), std::move(fn), {}, true);
    std::vector<Constraint> cs;
    for (std::size_t i = 0; i < 3; ++i)
        cs.push_back({"C" + std::to_string(i + 1), [k, i](std::span<const double> x) {
                          return truss_constraints({x[0], x[1]}, k)[i] <= 0;
                      }});
    return apply_death_penalty(raw, std::move(cs));
}

// ---------------------------------------------------------------------------
// Non-uniform linear antenna array

struct AntennaConfig {
    double steer_deg = 90.0;     // main-beam direction
    double exclusion_deg = 10.0; // main-lobe half-width left out of the max
    double grid_step_deg = 0.5;
    double fixed_element = 2.25; // wavelengths
    double floor_db = -400.0;
};

constexpr double kAntennaMargin = 1e-12;

/// Array factor of four free elements plus the fixed one.
inline double antenna_gain(std::span<const double> x, double theta_deg, const AntennaConfig& cfg = {}) {
    constexpr double deg = std::numbers::pi / 180.0;
    const double u = std::cos(theta_deg * deg) - std::cos(cfg.steer_deg * deg);
    double g = std::cos(cfg.fixed_element * 2.0 * std::numbers::pi * u);
    for (double xi : x) g += std::cos(2.0 * std::numbers::pi * xi * u);
    return g;
}

/// Level in dB relative to the main beam, floored for |G| = 0.
inline double antenna_level_db(std::span<const double> x, double theta_deg, const AntennaConfig& cfg = {}) {
    const double main = antenna_gain(x, cfg.steer_deg, cfg);
    const double g = std::abs(antenna_gain(x, theta_deg, cfg));
    if (g == 0.0) return cfg.floor_db;
    return std::max(cfg.floor_db, 20.0 * std::log10(g / main));
}

inline bool antenna_feasible(std::span<const double> x, const AntennaConfig& cfg = {}) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > kAntennaMargin && x[i] < cfg.fixed_element - kAntennaMargin)) return false;
        lo = std::min(lo, x[i]);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (!(std::abs(x[i] - x[j]) > 0.25 + kAntennaMargin)) return false;
    }
    return lo > 0.125 + kAntennaMargin && lo <= 2.0;
}

/// Peak side-lobe level over the grid, excluding |theta - steer| < exclusion.
inline double antenna_peak_sll(std::span<const double> x, const AntennaConfig& cfg = {}) {
    double peak = cfg.floor_db;
    const auto steps = static_cast<std::size_t>(std::llround(180.0 / cfg.grid_step_deg));
    for (std::size_t s = 0; s <= steps; ++s) {
        const double theta = static_cast<double>(s) * cfg.grid_step_deg;
        if (std::abs(theta - cfg.steer_deg) < cfg.exclusion_deg) continue;
        peak = std::max(peak, antenna_level_db(x, theta, cfg));
    }
    return peak;
}

inline Fitness antenna_sll(std::span<const double> x, const AntennaConfig& cfg = {}) {
    return antenna_feasible(x, cfg) ? Fitness(antenna_peak_sll(x, cfg)) : Fitness::infeasible();
}

inline Problem make_antenna_sll(const AntennaConfig& cfg = {}) {
    ObjectiveFn fn = [cfg](std::span<const double> x, RngStream&) { return antenna_peak_sll(x, cfg); };
    Problem raw("antenna_sll", Bounds::uniform(4, 0.0, cfg.fixed_element), std::move(fn), {}, true);
    return apply_death_penalty(
        raw, {{"spacing_and_range", [cfg](std::span<const double> x) { return antenna_feasible(x, cfg); }}});
}

// ---------------------------------------------------------------------------
// Frequency-modulated sound wave

constexpr std::array<double, 6> kFmTarget{1.0, 5.0, 1.5, 4.8, 2.0, 4.9};
constexpr double kFmLower = -6.4;
constexpr double kFmUpper = 6.35;

/// y(t) = a1 sin(w1 t th) + a2 sin(w2 t th) + a3 sin(w3 t th), th = 2 pi / 100.
inline double fm_signal(std::span<const double> p, int t) {
    const double theta = 2.0 * std::numbers::pi / 100.0;
    const double tt = static_cast<double>(t) * theta;
    return p[0] * std::sin(p[1] * tt) + p[2] * std::sin(p[3] * tt) + p[4] * std::sin(p[5] * tt);
}

inline double fm_wave_error(std::span<const double> p) {
    if (p.size() != 6) throw std::invalid_argument("fm_wave_error: expects six parameters");
    double s = 0;
    for (int t = 1; t <= 100; ++t) {
        const double e = fm_signal(p, t) - fm_signal(kFmTarget, t);
        s += e * e;
    }
    return s;
}

inline Problem make_fm_wave() {
    ObjectiveFn fn = [](std::span<const double> x, RngStream&) { return fm_wave_error(x); };
    Problem p("fm_wave", Bounds::uniform(6, kFmLower, kFmUpper), std::move(fn), {}, true, 0.0);
    p.set_known_argmin(Position(kFmTarget.begin(), kFmTarget.end()));
    return p;
}

} // namespace shrike::eng
