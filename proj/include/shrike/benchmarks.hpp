#pragma once

/// @file benchmarks.hpp
/// @brief Test-function suite: classic basic functions, their shifted
/// instances (F1-F13), composition functions (F14-F19) and the ten
/// 100-Digit Challenge functions (C01-C10).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shrike/core.hpp"
#include "shrike/data_file.hpp"

namespace shrike::bench {

enum class BasicFunction {
    sphere,
    schwefel_2_22,
    schwefel_1_2,
    max_abs,
    rosenbrock,
    step,
    quartic_noise,
    schwefel_sine,
    rastrigin,
    ackley,
    griewank,
    penalized_1,
    penalized_2,
    weierstrass,
};

inline std::string_view to_string(BasicFunction id) {
    switch (id) {
    case BasicFunction::sphere: return "sphere";
    case BasicFunction::schwefel_2_22: return "schwefel_2_22";
    case BasicFunction::schwefel_1_2: return "schwefel_1_2";
    case BasicFunction::max_abs: return "max_abs";
    case BasicFunction::rosenbrock: return "rosenbrock";
    case BasicFunction::step: return "step";
    case BasicFunction::quartic_noise: return "quartic_noise";
    case BasicFunction::schwefel_sine: return "schwefel_sine";
    case BasicFunction::rastrigin: return "rastrigin";
    case BasicFunction::ackley: return "ackley";
    case BasicFunction::griewank: return "griewank";
    case BasicFunction::penalized_1: return "penalized_1";
    case BasicFunction::penalized_2: return "penalized_2";
    case BasicFunction::weierstrass: return "weierstrass";
    }
    return "?";
}

namespace detail {

/// sin(pi x) with exact zeros at integers.
inline double sin_pi(double x) {
    double r = std::fmod(x, 2.0); // (-2, 2)
    if (r > 1.0) r -= 2.0;
    else if (r < -1.0) r += 2.0; // [-1, 1]
    if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
    // Fold into [-1/2, 1/2] using sin(pi r) = sin(pi (1 - r)).
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

inline double penalty_u(double x, double a, double k, double m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

constexpr double kWeierstrassA = 0.5;
constexpr double kWeierstrassB = 3.0;
constexpr int kWeierstrassKmax = 20;

inline double weierstrass_term(double v) {
    double s = 0;
    double ak = 1, bk = 1;
    for (int k = 0; k <= kWeierstrassKmax; ++k) {
        s += ak * std::cos(2.0 * std::numbers::pi * bk * (v + 0.5));
        ak *= kWeierstrassA;
        bk *= kWeierstrassB;
    }
    return s;
}

} // namespace detail

/// Canonical dimension-generic formulas. quartic_noise adds one U[0,1)
/// draw from `noise`, which must then be non-null.
inline double eval_basic(BasicFunction id, std::span<const double> z, RngStream* noise = nullptr) {
    using std::numbers::pi;
    const std::size_t n = z.size();
    const double nd = static_cast<double>(n);
    double s = 0;
    switch (id) {
    case BasicFunction::sphere:
        for (double v : z) s += v * v;
        return s;
    case BasicFunction::schwefel_2_22: {
        double prod = 1;
        for (double v : z) {
            s += std::abs(v);
            prod *= std::abs(v);
        }
        return s + prod;
    }
    case BasicFunction::schwefel_1_2: {
        double partial = 0;
        for (double v : z) {
            partial += v;
            s += partial * partial;
        }
        return s;
    }
    case BasicFunction::max_abs: {
        double m = 0;
        for (double v : z) m = std::max(m, std::abs(v));
        return m;
    }
    case BasicFunction::rosenbrock:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double a = z[i + 1] - z[i] * z[i];
            const double b = z[i] - 1.0;
            s += 100.0 * a * a + b * b;
        }
        return s;
    case BasicFunction::step:
        for (double v : z) {
            const double f = std::floor(v + 0.5);
            s += f * f;
        }
        return s;
    case BasicFunction::quartic_noise:
        if (noise == nullptr) throw std::invalid_argument("quartic_noise needs a random stream");
        for (std::size_t i = 0; i < n; ++i) {
            const double v2 = z[i] * z[i];
            s += static_cast<double>(i + 1) * v2 * v2;
        }
        return s + noise->uniform01();
    case BasicFunction::schwefel_sine:
        for (double v : z) s += -v * std::sin(std::sqrt(std::abs(v)));
        return s;
    case BasicFunction::rastrigin:
        for (double v : z) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
        return s;
    case BasicFunction::ackley: {
        double sq = 0, cs = 0;
        for (double v : z) {
            sq += v * v;
            cs += std::cos(2.0 * pi * v);
        }
        // Grouped so that the origin evaluates to exactly zero.
        return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(sq / nd))) + (std::exp(1.0) - std::exp(cs / nd));
    }
    case BasicFunction::griewank: {
        double prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            s += z[i] * z[i];
            prod *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
        }
        return s / 4000.0 - prod + 1.0;
    }
    case BasicFunction::penalized_1: {
        auto y = [&](std::size_t i) { return 1.0 + (z[i] + 1.0) / 4.0; };
        const double s1 = detail::sin_pi(y(0));
        double body = 10.0 * s1 * s1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double a = y(i) - 1.0;
            const double b = detail::sin_pi(y(i + 1));
            body += a * a * (1.0 + 10.0 * b * b);
        }
        const double last = y(n - 1) - 1.0;
        body += last * last;
        double pen = 0;
        for (double v : z) pen += detail::penalty_u(v, 10.0, 100.0, 4.0);
        return pi / nd * body + pen;
    }
    case BasicFunction::penalized_2: {
        const double s1 = detail::sin_pi(3.0 * z[0]);
        double body = s1 * s1;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double a = z[i] - 1.0;
            const double b = detail::sin_pi(3.0 * z[i + 1]);
            body += a * a * (1.0 + b * b);
        }
        const double last = z[n - 1] - 1.0;
        const double c = detail::sin_pi(2.0 * z[n - 1]);
        body += last * last * (1.0 + c * c);
        double pen = 0;
        for (double v : z) pen += detail::penalty_u(v, 5.0, 100.0, 4.0);
        return 0.1 * body + pen;
    }
    case BasicFunction::weierstrass: {
        const double offset = detail::weierstrass_term(0.0);
        for (double v : z) s += detail::weierstrass_term(v) - offset;
        return s;
    }
    }
    throw std::invalid_argument("eval_basic: unknown function");
}

// ---------------------------------------------------------------------------
// Shifted instances

/// Where each base function attains its minimum. Shifted problems evaluate
/// f(x - s + argmin) so that the optimum sits exactly at s.
inline double base_argmin(BasicFunction id) {
    switch (id) {
    case BasicFunction::rosenbrock:
    case BasicFunction::penalized_2: return 1.0;
    case BasicFunction::penalized_1: return -1.0;
    default: return 0.0;
    }
}

struct ShiftedSpec {
    std::string id;
    BasicFunction base;
    Position shift;
    Bounds bounds;
    std::optional<double> known_min;
};

inline Problem make_shifted(const ShiftedSpec& spec) {
    if (spec.shift.size() != spec.bounds.dimension())
        throw std::invalid_argument(spec.id + ": shift length does not match bounds");
    if (!spec.bounds.strictly_contains(spec.shift))
        throw std::invalid_argument(spec.id + ": shift must lie strictly inside the bounds");
    const BasicFunction base = spec.base;
    const Position shift = spec.shift;
    const double offset = base_argmin(base);
    const bool noisy = base == BasicFunction::quartic_noise;
    ObjectiveFn fn = [base, shift, offset, noisy](std::span<const double> x, RngStream& rng) {
        Position z(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - shift[i]) + offset;
        return eval_basic(base, z, noisy ? &rng : nullptr);
    };
    Problem p(spec.id, spec.bounds, std::move(fn), {}, !noisy, spec.known_min);
    p.set_known_argmin(spec.shift);
    return p;
}

/// F1-F13 at dimension `dim` with their standard ranges and fixed shifts.
inline std::vector<ShiftedSpec> classic_shifted_specs(std::size_t dim = 10) {
    auto spec = [dim](std::string id, BasicFunction f, double lo, double hi, double s, double fmin) {
        return ShiftedSpec{std::move(id), f, Position(dim, s), Bounds::uniform(dim, lo, hi), fmin};
    };
    using F = BasicFunction;
    return {
        spec("F1", F::sphere, -100, 100, -30, 0),
        spec("F2", F::schwefel_2_22, -10, 10, -3, 0),
        spec("F3", F::schwefel_1_2, -100, 100, -30, 0),
        spec("F4", F::max_abs, -100, 100, -30, 0),
        spec("F5", F::rosenbrock, -30, 30, -15, 0),
        spec("F6", F::step, -100, 100, -75, 0),
        spec("F7", F::quartic_noise, -1.28, 1.28, -0.25, 0),
        spec("F8", F::schwefel_sine, -500, 500, -300, -418.9829 * static_cast<double>(dim)),
        spec("F9", F::rastrigin, -5.12, 5.12, -2, 0),
        spec("F10", F::ackley, -32, 32, 0, 0),
        spec("F11", F::griewank, -600, 600, -400, 0),
        spec("F12", F::penalized_1, -50, 50, -30, 0),
        spec("F13", F::penalized_2, -50, 50, -10, 0),
    };
}

/// The 1-D minimizer of -z sin(sqrt|z|) on [-500, 500].
constexpr double kSchwefelSineArgmin = 420.9687;

// ---------------------------------------------------------------------------
// Composition functions

constexpr std::size_t kCompositeComponents = 10;
constexpr std::size_t kCompositeDimension = 10;
constexpr double kCompositeBound = 5.0;

struct CompositeSpec {
    std::string id;
    std::array<BasicFunction, kCompositeComponents> components;
    std::array<double, kCompositeComponents> sigma;
    std::array<double, kCompositeComponents> lambda;
    std::array<double, kCompositeComponents> bias{0, 100, 200, 300, 400, 500, 600, 700, 800, 900};
    std::vector<Position> optima; // kCompositeComponents points in [-5, 5]^D
    double scale = 2000.0;

    void validate() const {
        if (optima.size() != kCompositeComponents)
            throw std::invalid_argument(id + ": composite needs one optimum per component");
        for (const auto& o : optima)
            if (o.size() != optima.front().size()) throw std::invalid_argument(id + ": ragged optima");
        for (double s : sigma)
            if (!(s > 0)) throw std::invalid_argument(id + ": sigma must be positive");
        for (double l : lambda)
            if (!(l > 0)) throw std::invalid_argument(id + ": lambda must be positive");
    }
};

/// Normalized blending weights at x. The largest raw weight is kept, the
/// rest are damped by (1 - max^10), then all are scaled to sum to one.
inline std::array<double, kCompositeComponents> composite_weights(const CompositeSpec& spec,
                                                                  std::span<const double> x) {
    const double dim = static_cast<double>(x.size());
    std::array<double, kCompositeComponents> w{};
    for (std::size_t i = 0; i < kCompositeComponents; ++i) {
        double d2 = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double t = x[j] - spec.optima[i][j];
            d2 += t * t;
        }
        w[i] = std::exp(-d2 / (2.0 * dim * spec.sigma[i] * spec.sigma[i]));
    }
    const double wmax = *std::max_element(w.begin(), w.end());
    const double damp = 1.0 - std::pow(wmax, 10.0);
    double sum = 0;
    for (auto& v : w) {
        if (v != wmax) v *= damp;
        sum += v;
    }
    if (sum == 0.0) {
        w.fill(1.0 / static_cast<double>(kCompositeComponents));
        return w;
    }
    for (auto& v : w) v /= sum;
    return w;
}

inline double eval_composite(const CompositeSpec& spec, std::span<const double> x) {
    const std::size_t dim = x.size();
    const auto w = composite_weights(spec, x);
    Position z(dim), edge(dim);
    double total = 0;
    for (std::size_t i = 0; i < kCompositeComponents; ++i) {
        if (w[i] == 0.0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            z[j] = (x[j] - spec.optima[i][j]) / spec.lambda[i];
            edge[j] = kCompositeBound / spec.lambda[i];
        }
        const double fmax = std::abs(eval_basic(spec.components[i], edge));
        total += w[i] * (spec.scale * eval_basic(spec.components[i], z) / fmax + spec.bias[i]);
    }
    return total;
}

/// The six composition recipes (F14-F19). `optima[k]` holds the
/// ten component optima for recipe k.
inline std::vector<CompositeSpec> composite_specs(const std::vector<std::vector<Position>>& optima) {
    if (optima.size() != 6) throw std::invalid_argument("composite_specs: need optima for six functions");
    using F = BasicFunction;
    constexpr double s100 = 5.0 / 100.0, s32 = 5.0 / 32.0, s05 = 5.0 / 0.5, s5 = 1.0 / 5.0;
    std::array<double, 10> ones;
    ones.fill(1.0);
    auto all = [](F f) {
        std::array<F, 10> c;
        c.fill(f);
        return c;
    };
    auto fill = [](double v) {
        std::array<double, 10> a;
        a.fill(v);
        return a;
    };
    const std::array<F, 10> cf5{F::ackley,     F::ackley,   F::rastrigin, F::rastrigin, F::weierstrass,
                                F::weierstrass, F::griewank, F::griewank,  F::sphere,    F::sphere};
    const std::array<F, 10> cf6{F::rastrigin, F::rastrigin, F::weierstrass, F::weierstrass, F::griewank,
                                F::griewank,  F::ackley,    F::ackley,      F::sphere,      F::sphere};
    std::vector<CompositeSpec> specs;
    auto add = [&](std::string id, std::array<F, 10> comps, std::array<double, 10> sigma,
                   std::array<double, 10> lambda) {
        CompositeSpec c;
        c.id = std::move(id);
        c.components = comps;
        c.sigma = sigma;
        c.lambda = lambda;
        specs.push_back(std::move(c));
    };
    add("F14", all(F::sphere), ones, fill(s100));
    add("F15", all(F::griewank), ones, fill(s100));
    add("F16", all(F::griewank), ones, fill(1.0));
    add("F17", cf5, ones, {s32, s32, 1, 1, s05, s05, s100, s100, s100, s100});
    add("F18", cf6, ones, {s5, s5, s05, s05, s100, s100, s32, s32, s100, s100});
    add("F19", cf6, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0},
        {0.1 * s5, 0.2 * s5, 0.3 * s05, 0.4 * s05, 0.5 * s100, 0.6 * s100, 0.7 * s32, 0.8 * s32, 0.9 * s100,
         1.0 * s100});
    for (std::size_t k = 0; k < specs.size(); ++k) {
        specs[k].optima = optima[k];
        specs[k].validate();
    }
    return specs;
}

inline Problem make_composite(CompositeSpec spec) {
    spec.validate();
    const std::size_t dim = spec.optima.front().size();
    Position argmin = spec.optima.front();
    std::string id = spec.id;
    ObjectiveFn fn = [spec = std::move(spec)](std::span<const double> x, RngStream&) {
        return eval_composite(spec, x);
    };
    Problem p(std::move(id), Bounds::uniform(dim, -kCompositeBound, kCompositeBound), std::move(fn), {}, true, 0.0);
    p.set_known_argmin(std::move(argmin));
    return p;
}

/// Component optima are drawn once from these seeds (one per recipe,
/// uniform on [-4, 4]^10) and shipped as data files.
constexpr std::uint64_t kCompositeOptimaSeedBase = 0x5348'4F41'C0DE'0014ULL;

inline std::vector<Position> generate_composite_optima(std::size_t recipe) {
    RngStream rng(kCompositeOptimaSeedBase + recipe);
    std::vector<Position> out(kCompositeComponents, Position(kCompositeDimension));
    for (auto& o : out)
        for (auto& v : o) v = rng.uniform(-4.0, 4.0);
    return out;
}

// ---------------------------------------------------------------------------
// 100-Digit Challenge

enum class Cec19Function { c01, c02, c03, c04, c05, c06, c07, c08, c09, c10 };

struct Cec19Info {
    std::string_view id;
    std::string_view title;
    std::size_t dimension;
    double bound;
};

inline Cec19Info cec19_info(Cec19Function f) {
    switch (f) {
    case Cec19Function::c01: return {"C01", "Storn's Chebyshev polynomial fitting", 9, 8192};
    case Cec19Function::c02: return {"C02", "inverse Hilbert matrix", 16, 16384};
    case Cec19Function::c03: return {"C03", "Lennard-Jones minimum energy cluster", 18, 4};
    case Cec19Function::c04: return {"C04", "Rastrigin", 10, 100};
    case Cec19Function::c05: return {"C05", "Griewank", 10, 100};
    case Cec19Function::c06: return {"C06", "Weierstrass", 10, 100};
    case Cec19Function::c07: return {"C07", "modified Schwefel", 10, 100};
    case Cec19Function::c08: return {"C08", "expanded Schaffer F6", 10, 100};
    case Cec19Function::c09: return {"C09", "Happy Cat", 10, 100};
    case Cec19Function::c10: return {"C10", "Ackley", 10, 100};
    }
    throw std::invalid_argument("cec19_info: unknown function");
}

/// Input scale mapping [-100, 100] onto each function's natural domain.
inline double cec19_scale(Cec19Function f) {
    switch (f) {
    case Cec19Function::c04: return 5.12 / 100.0;
    case Cec19Function::c05: return 600.0 / 100.0;
    case Cec19Function::c06: return 0.5 / 100.0;
    case Cec19Function::c07: return 1000.0 / 100.0;
    case Cec19Function::c08: return 1.0;
    case Cec19Function::c09: return 5.0 / 100.0;
    case Cec19Function::c10: return 32.0 / 100.0;
    default: return 1.0;
    }
}

namespace detail {

/// T_n(x) by the three-term recurrence.
inline double chebyshev_t(std::size_t n, double x) {
    if (n == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (std::size_t k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Coefficients in descending powers; p(y) by Horner.
inline double horner(std::span<const double> c, double y) {
    double p = 0;
    for (double v : c) p = p * y + v;
    return p;
}

/// Storn's polynomial-fitting penalty: |p| <= 1 on 32 D + 1 samples of
/// [-1, 1] and p(+-1.2) >= T_{D-1}(1.2).
inline double chebyshev_fit(std::span<const double> c) {
    const std::size_t dim = c.size();
    const double threshold = chebyshev_t(dim - 1, 1.2);
    const std::size_t samples = 32 * dim;
    double sum = 0;
    for (std::size_t j = 0; j <= samples; ++j) {
        const double y = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(samples);
        const double p = horner(c, y);
        if (p > 1.0 || p < -1.0) sum += (1.0 - std::abs(p)) * (1.0 - std::abs(p));
    }
    for (double y : {-1.2, 1.2}) {
        const double p = horner(c, y);
        if (p < threshold) sum += (p - threshold) * (p - threshold);
    }
    return sum;
}

/// Sum of |H W - I| over the n x n Hilbert matrix H, W read row-major.
inline double inverse_hilbert(std::span<const double> w) {
    const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(w.size()))));
    if (n * n != w.size()) throw std::invalid_argument("inverse_hilbert: dimension must be a square");
    double sum = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            double y = 0;
            for (std::size_t i = 0; i < n; ++i) y += w[i * n + k] / static_cast<double>(i + j + 1);
            sum += std::abs(j == k ? y - 1.0 : y);
        }
    return sum;
}

constexpr double kLennardJonesOffset = 12.7120622568;

/// Pair potential sum_{i<j} (d^-12 - 2 d^-6) over atoms packed as xyz triples.
inline double lennard_jones(std::span<const double> x) {
    const std::size_t atoms = x.size() / 3;
    double sum = 0;
    for (std::size_t i = 0; i + 1 < atoms; ++i)
        for (std::size_t j = i + 1; j < atoms; ++j) {
            double d2 = 0;
            for (std::size_t c = 0; c < 3; ++c) {
                const double t = x[3 * i + c] - x[3 * j + c];
                d2 += t * t;
            }
            const double d6 = d2 * d2 * d2;
            sum += d6 > 1e-10 ? (1.0 / d6 - 2.0) / d6 : 1e20;
        }
    return sum;
}

inline double modified_schwefel(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double f = 0;
    for (double v : x) {
        const double z = v + 420.9687462275036;
        if (z > 500) {
            const double r = 500.0 - std::fmod(z, 500.0);
            f -= r * std::sin(std::sqrt(r));
            const double t = (z - 500.0) / 100.0;
            f += t * t / n;
        } else if (z < -500) {
            const double r = std::fmod(std::abs(z), 500.0);
            f -= (r - 500.0) * std::sin(std::sqrt(500.0 - r));
            const double t = (z + 500.0) / 100.0;
            f += t * t / n;
        } else {
            f -= z * std::sin(std::sqrt(std::abs(z)));
        }
    }
    return f + 418.9828872724338 * n;
}

inline double expanded_schaffer_f6(std::span<const double> x) {
    const std::size_t n = x.size();
    double f = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = x[i], b = x[(i + 1) % n];
        const double r2 = a * a + b * b;
        const double s = std::sin(std::sqrt(r2));
        const double den = 1.0 + 0.001 * r2;
        f += 0.5 + (s * s - 0.5) / (den * den);
    }
    return f;
}

inline double happy_cat(std::span<const double> z) {
    const double n = static_cast<double>(z.size());
    double r2 = 0, sum = 0;
    for (double v : z) {
        r2 += v * v;
        sum += v;
    }
    return std::pow(std::abs(r2 - n), 0.25) + (0.5 * r2 + sum) / n + 0.5;
}

} // namespace detail

/// 100-Digit value, with global minimum 1. Inputs outside the function's
/// range are rejected.
inline double eval_cec19(Cec19Function f, std::span<const double> x) {
    const auto info = cec19_info(f);
    if (x.size() != info.dimension)
        throw std::invalid_argument(std::string(info.id) + ": expected dimension " + std::to_string(info.dimension));
    for (double v : x)
        if (!(v >= -info.bound && v <= info.bound))
            throw std::out_of_range(std::string(info.id) + ": input outside [-" + format_double(info.bound) + ", " +
                                    format_double(info.bound) + "]");
    switch (f) {
    case Cec19Function::c01: return 1.0 + detail::chebyshev_fit(x);
    case Cec19Function::c02: return 1.0 + detail::inverse_hilbert(x);
    case Cec19Function::c03: return 1.0 + detail::kLennardJonesOffset + detail::lennard_jones(x);
    default: break;
    }
    const double scale = cec19_scale(f);
    Position z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] * scale;
    switch (f) {
    case Cec19Function::c04: return 1.0 + eval_basic(BasicFunction::rastrigin, z);
    case Cec19Function::c05: return 1.0 + eval_basic(BasicFunction::griewank, z);
    case Cec19Function::c06: return 1.0 + eval_basic(BasicFunction::weierstrass, z);
    case Cec19Function::c07: return 1.0 + detail::modified_schwefel(z);
    case Cec19Function::c08: return 1.0 + detail::expanded_schaffer_f6(z);
    case Cec19Function::c09: return 1.0 + detail::happy_cat(z);
    case Cec19Function::c10: return 1.0 + eval_basic(BasicFunction::ackley, z);
    default: break;
    }
    throw std::invalid_argument("eval_cec19: unknown function");
}

/// Documented minimizers for the functions whose argmin is known in closed
/// form (C01 and C02 come from data files).
inline std::optional<Position> cec19_known_argmin(Cec19Function f) {
    const std::size_t dim = cec19_info(f).dimension;
    switch (f) {
    case Cec19Function::c04:
    case Cec19Function::c05:
    case Cec19Function::c06:
    case Cec19Function::c07:
    case Cec19Function::c08:
    case Cec19Function::c10: return Position(dim, 0.0);
    case Cec19Function::c09: return Position(dim, -20.0); // z = -1
    default: return std::nullopt;
    }
}

inline Problem make_cec19(Cec19Function f, std::optional<Position> argmin = std::nullopt) {
    const auto info = cec19_info(f);
    ObjectiveFn fn = [f](std::span<const double> x, RngStream&) { return eval_cec19(f, x); };
    Problem p(std::string(info.id), Bounds::uniform(info.dimension, -info.bound, info.bound), std::move(fn), {},
              true, 1.0);
    if (!argmin) argmin = cec19_known_argmin(f);
    if (argmin) p.set_known_argmin(std::move(*argmin));
    return p;
}

} // namespace shrike::bench
