#pragma once

/// @file core.hpp
/// @brief Problems, fitness ordering, bounds handling and evaluation
/// accounting shared by every optimizer in the library.

#include <algorithm>
#include <chrono>
#include <compare>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shrike/rng.hpp"

namespace shrike {

using Position = std::vector<double>;

/// Axis-aligned box. lower[i] < upper[i] is enforced on construction.
class Bounds {
  public:
    Bounds(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size())
            throw std::invalid_argument("Bounds: lower and upper must have the same non-zero length");
        for (std::size_t i = 0; i < lower_.size(); ++i) {
            if (!(lower_[i] < upper_[i]))
                throw std::invalid_argument("Bounds: lower[" + std::to_string(i) +
                                            "] must be strictly below upper");
        }
    }

    static Bounds uniform(std::size_t dim, double lo, double hi) {
        return Bounds(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    std::size_t dimension() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }

    bool contains(std::span<const double> x) const noexcept {
        if (x.size() != lower_.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
        return true;
    }

    bool strictly_contains(std::span<const double> x) const noexcept {
        if (x.size() != lower_.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] > lower_[i] && x[i] < upper_[i])) return false;
        return true;
    }

  private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Minimization fitness with a death-penalty sentinel that ranks below
/// every finite value.
class Fitness {
  public:
    constexpr Fitness() noexcept = default; // infeasible
    constexpr explicit Fitness(double value) noexcept : value_(value), feasible_(true) {}

    static constexpr Fitness infeasible() noexcept { return Fitness(); }

    constexpr bool feasible() const noexcept { return feasible_; }

    /// The objective value; +inf for the infeasible sentinel.
    constexpr double value() const noexcept {
        return feasible_ ? value_ : std::numeric_limits<double>::infinity();
    }

    constexpr bool better_than(const Fitness& other) const noexcept { return *this < other; }

    friend constexpr std::weak_ordering operator<=>(const Fitness& a, const Fitness& b) noexcept {
        if (a.feasible_ != b.feasible_)
            return a.feasible_ ? std::weak_ordering::less : std::weak_ordering::greater;
        if (!a.feasible_) return std::weak_ordering::equivalent;
        if (a.value_ < b.value_) return std::weak_ordering::less;
        if (b.value_ < a.value_) return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }
    friend constexpr bool operator==(const Fitness& a, const Fitness& b) noexcept {
        return (a <=> b) == 0;
    }

  private:
    double value_ = 0.0;
    bool feasible_ = false;
};

/// Objective functions receive the run's stream so that noisy objectives
/// stay replayable. Deterministic objectives ignore it.
using ObjectiveFn = std::function<double(std::span<const double>, RngStream&)>;

struct Constraint {
    std::string name;
    /// True when the position satisfies the constraint.
    std::function<bool(std::span<const double>)> satisfied;
};

/// Bounded objective. Immutable after construction, safe to share between
/// concurrent runs.
class Problem {
  public:
    Problem(std::string id, Bounds bounds, ObjectiveFn objective,
            std::vector<Constraint> constraints = {}, bool deterministic = true,
            std::optional<double> known_min = std::nullopt)
        : id_(std::move(id)), bounds_(std::move(bounds)), objective_(std::move(objective)),
          constraints_(std::move(constraints)), deterministic_(deterministic),
          known_min_(known_min) {
        if (!objective_) throw std::invalid_argument("Problem " + id_ + ": objective is empty");
    }

    const std::string& id() const noexcept { return id_; }
    std::size_t dimension() const noexcept { return bounds_.dimension(); }
    const Bounds& bounds() const noexcept { return bounds_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    bool deterministic() const noexcept { return deterministic_; }
    std::optional<double> known_min() const noexcept { return known_min_; }

    /// A point where known_min is attained, when one is documented.
    const std::optional<Position>& known_argmin() const noexcept { return known_argmin_; }
    Problem& set_known_argmin(Position x) {
        known_argmin_ = std::move(x);
        return *this;
    }

    double raw_objective(std::span<const double> x, RngStream& rng) const {
        return objective_(x, rng);
    }

    bool feasible(std::span<const double> x) const {
        return std::all_of(constraints_.begin(), constraints_.end(),
                           [&](const Constraint& c) { return c.satisfied(x); });
    }

  private:
    std::string id_;
    Bounds bounds_;
    ObjectiveFn objective_;
    std::vector<Constraint> constraints_;
    bool deterministic_;
    std::optional<double> known_min_;
    std::optional<Position> known_argmin_;
};

/// Counts objective calls. A limit turns the counter into a budget; runs
/// check exhausted() at iteration boundaries.
struct EvalCounter {
    std::uint64_t count = 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();

    bool exhausted() const noexcept { return count >= limit; }
};

class EvaluationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline std::string format_position(std::span<const double> x) {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ')';
    return os.str();
}

/// p[i] = lower[i] + u_i * (upper[i] - lower[i]), u_i ~ U[0,1), drawn in
/// dimension order.
inline Position init_position(const Bounds& bounds, RngStream& rng) {
    Position p(bounds.dimension());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = bounds.lower(i) + rng.uniform01() * (bounds.upper(i) - bounds.lower(i));
    return p;
}

inline void clamp_in_place(Position& x, const Bounds& bounds) {
    if (x.size() != bounds.dimension())
        throw std::invalid_argument("clamp: position length does not match bounds");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], bounds.lower(i), bounds.upper(i));
}

inline Position clamp(Position x, const Bounds& bounds) {
    clamp_in_place(x, bounds);
    return x;
}

/// Death-penalty evaluation: a violated constraint returns INFEASIBLE and
/// the objective is not called. Otherwise the objective runs once and the
/// counter is incremented once.
inline Fitness evaluate(const Problem& problem, std::span<const double> x, EvalCounter& counter,
                        RngStream& rng) {
    if (!problem.bounds().contains(x))
        throw std::logic_error("evaluate(" + problem.id() + "): position out of bounds " +
                               format_position(x));
    if (!problem.feasible(x)) return Fitness::infeasible();
    const double v = problem.raw_objective(x, rng);
    ++counter.count;
    if (!std::isfinite(v))
        throw EvaluationError("non-finite objective value on problem " + problem.id() + " at " +
                              format_position(x));
    return Fitness(v);
}

enum class Role { male_parent, female_parent, nestling };

struct Bird {
    Position position;
    Fitness fitness;
    Role role = Role::nestling;

    bool is_parent() const noexcept { return role != Role::nestling; }
};

struct BestRecord {
    Position position;
    Fitness fitness; // infeasible until something is recorded

    /// Replaces the record iff f is strictly better. Returns true on change.
    bool offer(std::span<const double> x, const Fitness& f) {
        if (!position.empty() && !f.better_than(fitness)) return false;
        position.assign(x.begin(), x.end());
        fitness = f;
        return true;
    }
};

struct Nest {
    std::vector<Bird> birds;
    BestRecord local_best;
};

struct SwarmState {
    std::vector<Nest> nests;
    BestRecord global_best;
    std::size_t iteration = 0;
    EvalCounter evaluations;
};

enum class BoundaryPolicy { clamp };

struct RunConfig {
    std::size_t nests = 15;
    std::size_t nestlings = 7;
    std::size_t regeneration_period = 50;
    std::size_t max_iterations = 500;
    double alpha = 1.0;
    std::uint64_t seed = 0;
    BoundaryPolicy boundary = BoundaryPolicy::clamp;
    /// Optional evaluation budget; unlimited by default.
    std::uint64_t max_evaluations = std::numeric_limits<std::uint64_t>::max();

    void validate() const {
        if (nests < 1) throw std::invalid_argument("RunConfig: nests must be >= 1");
        if (nestlings < 1) throw std::invalid_argument("RunConfig: nestlings must be >= 1");
        if (max_iterations < 1) throw std::invalid_argument("RunConfig: max_iterations must be >= 1");
        if (regeneration_period < 1 || regeneration_period > max_iterations)
            throw std::invalid_argument("RunConfig: regeneration period must be in [1, max_iterations]");
    }
};

struct CurvePoint {
    std::size_t iteration;
    Fitness best;
};

struct RunResult {
    Position best_position;
    Fitness best_fitness;
    std::vector<CurvePoint> curve; // max_iterations + 1 entries
    std::uint64_t evaluations = 0;
    std::chrono::duration<double, std::milli> wall_time{0};
};

namespace detail {

/// Pads a curve that stopped early (evaluation budget) up to the full
/// iteration count with its last value.
inline void pad_curve(std::vector<CurvePoint>& curve, std::size_t max_iterations) {
    while (!curve.empty() && curve.size() < max_iterations + 1)
        curve.push_back({curve.size(), curve.back().best});
}

} // namespace detail

} // namespace shrike
