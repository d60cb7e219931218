#pragma once

/// @file config.hpp
/// @brief Experiment configuration files.
///
/// Grammar, one directive per line, `#` starts a comment:
///
///     rounds = 30
///     iterations = 500
///     base_seed = 12345
///     output_dir = results/cec
///     budget = iterations            # or: evaluations
///     max_evaluations = 100000       # required when budget = evaluations
///     record_wall_time = false
///     algorithm = SHOA nests=15 nestlings=7 regeneration_period=50 alpha=1
///     algorithm = PSO c1=2 c2=2 inertia=0.6 as=PSO-canonical r_low=0
///     problem = F1
///     problem = F9
///
/// `algorithm` and `problem` may repeat; every other key appears at most
/// once. Algorithm names are SHOA, PSO, GA and RANDOM; `as=LABEL` renames
/// the column (labels must be unique).

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shrike/baselines.hpp"
#include "shrike/core.hpp"
#include "shrike/data_file.hpp"
#include "shrike/registry.hpp"

namespace shrike::harness {

enum class Algorithm { shoa, pso, ga, random };

inline std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::shoa: return "SHOA";
    case Algorithm::pso: return "PSO";
    case Algorithm::ga: return "GA";
    case Algorithm::random: return "RANDOM";
    }
    return "?";
}

struct AlgorithmSpec {
    Algorithm kind = Algorithm::shoa;
    std::string label;
    RunConfig shoa;
    baselines::PsoParams pso;
    baselines::GaParams ga;
    baselines::RandomParams random;
};

enum class BudgetMode { iterations, evaluations };

struct ExperimentConfig {
    std::vector<AlgorithmSpec> algorithms;
    std::vector<std::string> problems;
    std::size_t rounds = 30;
    std::size_t iterations = 500;
    std::uint64_t base_seed = 0;
    std::filesystem::path output_dir = "results";
    BudgetMode budget = BudgetMode::iterations;
    std::uint64_t max_evaluations = 0;
    bool record_wall_time = false;
};

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::uint64_t parse_u64(const std::string& v, const std::string& where) {
    std::uint64_t out = 0;
    const int base = v.rfind("0x", 0) == 0 || v.rfind("0X", 0) == 0 ? 16 : 10;
    const char* first = v.data() + (base == 16 ? 2 : 0);
    auto res = std::from_chars(first, v.data() + v.size(), out, base);
    if (v.empty() || res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw ConfigError(where + ": expected a non-negative integer, got '" + v + "'");
    return out;
}

inline double parse_real(const std::string& v, const std::string& where) {
    try {
        return parse_double(v);
    } catch (const std::invalid_argument&) {
        throw ConfigError(where + ": expected a number, got '" + v + "'");
    }
}

inline bool parse_bool(const std::string& v, const std::string& where) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(where + ": expected true or false, got '" + v + "'");
}

inline void set_param(AlgorithmSpec& spec, const std::string& key, const std::string& value, const std::string& where) {
    auto real = [&] { return parse_real(value, where); };
    auto count = [&] { return static_cast<std::size_t>(parse_u64(value, where)); };
    switch (spec.kind) {
    case Algorithm::shoa:
        if (key == "nests") return void(spec.shoa.nests = count());
        if (key == "nestlings") return void(spec.shoa.nestlings = count());
        if (key == "regeneration_period") return void(spec.shoa.regeneration_period = count());
        if (key == "alpha") return void(spec.shoa.alpha = real());
        break;
    case Algorithm::pso:
        if (key == "c1") return void(spec.pso.c1 = real());
        if (key == "c2") return void(spec.pso.c2 = real());
        if (key == "inertia") return void(spec.pso.inertia = real());
        if (key == "r_low") return void(spec.pso.r_low = real());
        if (key == "r_high") return void(spec.pso.r_high = real());
        if (key == "agents") return void(spec.pso.agents = count());
        break;
    case Algorithm::ga:
        if (key == "crossover_rate") return void(spec.ga.crossover_rate = real());
        if (key == "mutation_rate") return void(spec.ga.mutation_rate = real());
        if (key == "elitism") return void(spec.ga.elitism = count());
        if (key == "agents") return void(spec.ga.agents = count());
        break;
    case Algorithm::random:
        if (key == "agents") return void(spec.random.agents = count());
        break;
    }
    throw ConfigError(where + ": unknown " + std::string(to_string(spec.kind)) + " parameter '" + key + "'");
}

inline AlgorithmSpec parse_algorithm(const std::string& value, const std::string& where) {
    std::istringstream in(value);
    std::string name;
    if (!(in >> name)) throw ConfigError(where + ": algorithm needs a name");
    AlgorithmSpec spec;
    if (name == "SHOA") spec.kind = Algorithm::shoa;
    else if (name == "PSO") spec.kind = Algorithm::pso;
    else if (name == "GA") spec.kind = Algorithm::ga;
    else if (name == "RANDOM") spec.kind = Algorithm::random;
    else throw ConfigError(where + ": unknown algorithm '" + name + "'");
    spec.label = name;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size())
            throw ConfigError(where + ": expected key=value, got '" + tok + "'");
        const std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "as") spec.label = v;
        else set_param(spec, k, v, where);
    }
    try {
        switch (spec.kind) {
        case Algorithm::shoa: {
            RunConfig probe = spec.shoa;
            probe.max_iterations = std::max<std::size_t>(probe.regeneration_period, 1);
            probe.validate();
            break;
        }
        case Algorithm::pso: spec.pso.validate(); break;
        case Algorithm::ga: spec.ga.validate(); break;
        case Algorithm::random:
            if (spec.random.agents < 1) throw std::invalid_argument("RandomParams: agents must be >= 1");
            break;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return spec;
}

} // namespace detail

/// Checks cross-field rules. Throws ConfigError naming the problem.
inline void validate(const ExperimentConfig& cfg, const Registry& registry) {
    if (cfg.algorithms.empty()) throw ConfigError("config: at least one algorithm is required");
    if (cfg.problems.empty()) throw ConfigError("config: at least one problem is required");
    if (cfg.rounds < 1) throw ConfigError("config: rounds must be >= 1");
    if (cfg.iterations < 1) throw ConfigError("config: iterations must be >= 1");
    if (cfg.algorithms.size() > 255) throw ConfigError("config: too many algorithms");
    if (cfg.rounds > 0xFFFFFFFFULL) throw ConfigError("config: too many rounds");
    if (cfg.budget == BudgetMode::evaluations && cfg.max_evaluations < 1)
        throw ConfigError("config: budget = evaluations needs max_evaluations >= 1");
    std::set<std::string> labels;
    for (const auto& a : cfg.algorithms) {
        if (a.label.find_first_of(",\";") != std::string::npos)
            throw ConfigError("config: algorithm label '" + a.label + "' may not contain , ; or quotes");
        if (!labels.insert(a.label).second)
            throw ConfigError("config: duplicate algorithm label '" + a.label + "' (use as=LABEL)");
        if (a.kind == Algorithm::shoa && a.shoa.regeneration_period > cfg.iterations)
            throw ConfigError("config: " + a.label + " regeneration_period exceeds iterations");
    }
    std::set<std::string> seen;
    for (const auto& p : cfg.problems) {
        if (!registry.contains(p)) throw ConfigError("config: unknown problem '" + p + "'");
        if (!seen.insert(p).second) throw ConfigError("config: problem '" + p + "' listed twice");
    }
}

inline ExperimentConfig parse_config(std::string_view text, const Registry& registry,
                                     const std::string& origin = "<config>") {
    ExperimentConfig cfg;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string where = origin + ":" + std::to_string(line_no);
        std::string line = raw.substr(0, raw.find('#'));
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = detail::trim(std::string_view(line).substr(0, eq));
        const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        if (key != "algorithm" && key != "problem" && !seen.insert(key).second)
            throw ConfigError(where + ": key '" + key + "' given twice");

        if (key == "algorithm") cfg.algorithms.push_back(detail::parse_algorithm(value, where));
        else if (key == "problem") cfg.problems.push_back(value);
        else if (key == "rounds") cfg.rounds = static_cast<std::size_t>(detail::parse_u64(value, where));
        else if (key == "iterations") cfg.iterations = static_cast<std::size_t>(detail::parse_u64(value, where));
        else if (key == "base_seed") cfg.base_seed = detail::parse_u64(value, where);
        else if (key == "output_dir") cfg.output_dir = value;
        else if (key == "max_evaluations") cfg.max_evaluations = detail::parse_u64(value, where);
        else if (key == "record_wall_time") cfg.record_wall_time = detail::parse_bool(value, where);
        else if (key == "budget") {
            if (value == "iterations") cfg.budget = BudgetMode::iterations;
            else if (value == "evaluations") cfg.budget = BudgetMode::evaluations;
            else throw ConfigError(where + ": budget must be 'iterations' or 'evaluations'");
        } else
            throw ConfigError(where + ": unknown key '" + key + "'");
    }
    validate(cfg, registry);
    return cfg;
}

inline ExperimentConfig load_config(const std::filesystem::path& path, const Registry& registry) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), registry, path.string());
}

} // namespace shrike::harness
