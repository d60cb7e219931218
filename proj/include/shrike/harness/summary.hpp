#pragma once

/// @file summary.hpp
/// @brief Report tables built from result rows: Mean/STD, Wilcoxon p-values
/// against a reference algorithm, Friedman mean ranks and averaged
/// convergence curves.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "shrike/data_file.hpp"
#include "shrike/harness/results_io.hpp"
#include "shrike/harness/runner.hpp"
#include "shrike/stats.hpp"

namespace shrike::harness {

constexpr double kSignificance = 0.05;

struct MeanStdCell {
    std::string algorithm;
    std::string problem;
    std::size_t runs = 0;
    std::size_t feasible_runs = 0;
    std::optional<double> mean; // absent when no feasible run
    std::optional<double> std;  // absent with fewer than two feasible runs
};

struct WilcoxonCell {
    std::string problem;
    std::string reference;
    std::string algorithm;
    std::optional<double> p; // absent (NA) when either sample is too small
    bool significant() const { return p && *p < kSignificance; }
};

struct FriedmanTable {
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;          // functions that entered the sums
    std::vector<std::string> excluded_problems; // NA for some algorithm
    stats::FriedmanSummary summary;
};

struct MeanCurve {
    std::string algorithm;
    std::string problem;
    std::vector<std::optional<double>> mean; // per iteration, over feasible rounds
};

struct Report {
    std::vector<std::string> algorithms; // first-appearance order
    std::vector<std::string> problems;
    std::vector<MeanStdCell> mean_std;
    std::string reference; // Wilcoxon baseline, empty with a single algorithm
    std::vector<WilcoxonCell> wilcoxon;
    std::optional<FriedmanTable> friedman; // needs >= 2 algorithms
    std::string friedman_note;
    std::vector<MeanCurve> curves;
    std::map<std::string, std::string> manifest;
};

namespace detail {

template <class T, class F>
std::vector<std::string> first_appearance(const std::vector<T>& rows, F key) {
    std::vector<std::string> out;
    for (const auto& r : rows)
        if (std::find(out.begin(), out.end(), key(r)) == out.end()) out.push_back(key(r));
    return out;
}

/// Feasible final values of one (algorithm, problem), keyed by round.
inline std::map<std::size_t, double> feasible_by_round(const std::vector<ResultRow>& rows, const std::string& alg,
                                                       const std::string& prob) {
    std::map<std::size_t, double> out;
    for (const auto& r : rows)
        if (r.algorithm == alg && r.problem == prob && !r.error && r.feasible && r.best_fitness.feasible())
            out[r.round] = r.best_fitness.value();
    return out;
}

inline std::vector<double> values_of(const std::map<std::size_t, double>& m) {
    std::vector<double> v;
    for (const auto& [k, x] : m) v.push_back(x);
    return v;
}

} // namespace detail

/// Builds every table. Infeasible and failed runs are left out of the
/// statistics; a cell whose sample is empty is NA.
inline Report summarize(const std::vector<ResultRow>& rows, const std::vector<CurveRow>& curves,
                        std::map<std::string, std::string> manifest = {}) {
    if (rows.empty()) throw std::invalid_argument("summarize: no rows");
    Report rep;
    rep.manifest = std::move(manifest);
    rep.algorithms = detail::first_appearance(rows, [](const ResultRow& r) { return r.algorithm; });
    rep.problems = detail::first_appearance(rows, [](const ResultRow& r) { return r.problem; });

    for (const auto& p : rep.problems)
        for (const auto& a : rep.algorithms) {
            MeanStdCell c{a, p};
            for (const auto& r : rows)
                if (r.algorithm == a && r.problem == p) ++c.runs;
            const auto vals = detail::values_of(detail::feasible_by_round(rows, a, p));
            c.feasible_runs = vals.size();
            if (vals.size() == 1) c.mean = vals.front();
            if (vals.size() >= 2) {
                const auto ms = stats::mean_std(vals);
                c.mean = ms.mean;
                c.std = ms.std;
            }
            rep.mean_std.push_back(std::move(c));
        }

    if (rep.algorithms.size() >= 2) {
        rep.reference = std::find(rep.algorithms.begin(), rep.algorithms.end(), "SHOA") != rep.algorithms.end()
                            ? "SHOA"
                            : rep.algorithms.front();
        for (const auto& p : rep.problems) {
            const auto ref = detail::values_of(detail::feasible_by_round(rows, rep.reference, p));
            for (const auto& a : rep.algorithms) {
                if (a == rep.reference) continue;
                WilcoxonCell c{p, rep.reference, a, std::nullopt};
                const auto other = detail::values_of(detail::feasible_by_round(rows, a, p));
                if (ref.size() >= 2 && other.size() >= 2) c.p = stats::wilcoxon_rank_sum(ref, other).p;
                rep.wilcoxon.push_back(std::move(c));
            }
        }

        FriedmanTable ft;
        ft.algorithms = rep.algorithms;
        std::vector<stats::RankMatrix> mats;
        for (const auto& p : rep.problems) {
            std::vector<std::map<std::size_t, double>> per_alg;
            for (const auto& a : rep.algorithms) per_alg.push_back(detail::feasible_by_round(rows, a, p));
            // A round enters only if every algorithm has a feasible value for it.
            stats::RankMatrix m;
            for (const auto& [round, v0] : per_alg.front()) {
                std::vector<double> row{v0};
                for (std::size_t k = 1; k < per_alg.size(); ++k) {
                    auto it = per_alg[k].find(round);
                    if (it == per_alg[k].end()) break;
                    row.push_back(it->second);
                }
                if (row.size() == per_alg.size()) m.push_back(std::move(row));
            }
            if (m.empty()) {
                ft.excluded_problems.push_back(p);
            } else {
                ft.problems.push_back(p);
                mats.push_back(std::move(m));
            }
        }
        if (!mats.empty()) {
            ft.summary = stats::friedman_summary(mats);
            rep.friedman = std::move(ft);
        } else {
            rep.friedman_note = "Friedman ranks not computed: no problem has feasible results for every algorithm.";
        }
    } else {
        rep.friedman_note = "Friedman ranks need at least two algorithms.";
    }

    std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, std::size_t>>> acc;
    for (const auto& c : curves) {
        auto& v = acc[{c.algorithm, c.problem}];
        if (v.size() <= c.iteration) v.resize(c.iteration + 1, {0.0, 0});
        if (c.global_best.feasible()) {
            v[c.iteration].first += c.global_best.value();
            ++v[c.iteration].second;
        }
    }
    for (const auto& a : rep.algorithms)
        for (const auto& p : rep.problems) {
            auto it = acc.find({a, p});
            if (it == acc.end()) continue;
            MeanCurve mc{a, p, {}};
            for (const auto& [sum, n] : it->second)
                mc.mean.push_back(n ? std::optional<double>(sum / static_cast<double>(n)) : std::nullopt);
            rep.curves.push_back(std::move(mc));
        }
    return rep;
}

namespace detail {

inline std::string opt_num(const std::optional<double>& v) { return v ? format_double(*v) : std::string("NA"); }

inline std::string sci(const std::optional<double>& v) {
    if (!v) return "NA";
    std::ostringstream o;
    o.precision(4);
    o << std::scientific << *v;
    return o.str();
}

inline std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

inline std::string file_safe(std::string s) {
    for (auto& c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
    return s;
}

} // namespace detail

inline std::string format_mean_std_csv(const Report& rep) {
    std::string out = "problem,algorithm,runs,feasible_runs,mean,std\n";
    for (const auto& c : rep.mean_std)
        out += c.problem + ',' + c.algorithm + ',' + std::to_string(c.runs) + ',' + std::to_string(c.feasible_runs) +
               ',' + detail::opt_num(c.mean) + ',' + detail::opt_num(c.std) + '\n';
    return out;
}

inline std::string format_wilcoxon_csv(const Report& rep) {
    std::string out = "problem,reference,algorithm,p,significant\n";
    for (const auto& c : rep.wilcoxon)
        out += c.problem + ',' + c.reference + ',' + c.algorithm + ',' + detail::opt_num(c.p) + ',' +
               (c.p ? (c.significant() ? "true" : "false") : "NA") + '\n';
    return out;
}

/// One row per function, then the summed "Mean Rank" row and the "Rank" row.
inline std::string format_friedman_csv(const Report& rep) {
    if (!rep.friedman) return "";
    const auto& ft = *rep.friedman;
    std::string out = "function";
    for (const auto& a : ft.algorithms) out += ',' + a;
    out += '\n';
    for (std::size_t f = 0; f < ft.problems.size(); ++f) {
        out += ft.problems[f];
        for (double v : ft.summary.per_function[f]) out += ',' + format_double(v);
        out += '\n';
    }
    out += "Mean Rank";
    for (double v : ft.summary.rank_sum) out += ',' + format_double(v);
    out += "\nRank";
    for (auto r : ft.summary.final_rank) out += ',' + std::to_string(r);
    out += '\n';
    return out;
}

inline std::string format_curve_csv(const MeanCurve& c) {
    std::string out = "iteration,mean_global_best\n";
    for (std::size_t i = 0; i < c.mean.size(); ++i) out += std::to_string(i) + ',' + detail::opt_num(c.mean[i]) + '\n';
    return out;
}

/// Plain-text report: Mean/STD, rank-sum p-values and Friedman ranks.
inline std::string format_summary_text(const Report& rep) {
    std::ostringstream o;
    const auto get = [&](const std::string& k, const std::string& def) {
        auto it = rep.manifest.find(k);
        return it == rep.manifest.end() ? def : it->second;
    };
    o << "# Budget: " << get("budget", "iterations");
    if (get("budget", "iterations") == "evaluations") o << " (max_evaluations = " << get("max_evaluations", "?") << ")";
    else o << " (" << get("iterations", "?") << " iterations per run)";
    o << ", rounds = " << get("rounds", "?") << "\n";
    o << "# Note: under an iteration budget the algorithms spend different numbers of objective\n"
         "# evaluations. SHOA with N nests and B nestlings uses up to N(2+3B) per iteration, a\n"
         "# 30-agent PSO or GA uses 30. Use budget = evaluations to equalise totals; the\n"
         "# evaluations column of results.csv records the actual spend.\n\n";

    std::size_t lw = 11, w = 14;
    for (const auto& p : rep.problems) lw = std::max(lw, p.size() + 2);
    for (const auto& a : rep.algorithms) w = std::max(w, a.size() + 2);
    o << "Mean / STD\n" << detail::pad("F", lw);
    for (const auto& a : rep.algorithms) o << detail::pad(a, w);
    o << "\n";
    for (const auto& p : rep.problems) {
        for (int line = 0; line < 2; ++line) {
            o << detail::pad(line == 0 ? p : "", lw);
            for (const auto& a : rep.algorithms) {
                auto it = std::find_if(rep.mean_std.begin(), rep.mean_std.end(),
                                       [&](const MeanStdCell& c) { return c.problem == p && c.algorithm == a; });
                o << detail::pad(detail::sci(line == 0 ? it->mean : it->std), w);
            }
            o << (line == 0 ? "  Mean\n" : "  STD\n");
        }
    }

    o << "\nWilcoxon rank-sum p-values";
    if (rep.wilcoxon.empty()) {
        o << ": none (single algorithm)\n";
    } else {
        o << " (" << rep.reference << " vs others, * = p < 0.05)\n" << detail::pad("F", lw);
        for (const auto& a : rep.algorithms)
            if (a != rep.reference) o << detail::pad(a, w);
        o << "\n";
        for (const auto& p : rep.problems) {
            o << detail::pad(p, lw);
            for (const auto& c : rep.wilcoxon)
                if (c.problem == p) o << detail::pad(detail::sci(c.p) + (c.significant() ? "*" : ""), w);
            o << "\n";
        }
    }

    o << "\nFriedman mean ranks\n";
    if (!rep.friedman) {
        o << rep.friedman_note << "\n";
    } else {
        const auto& ft = *rep.friedman;
        o << detail::pad("F", lw);
        for (const auto& a : ft.algorithms) o << detail::pad(a, w);
        o << "\n";
        auto fixed = [](double v) {
            std::ostringstream s;
            s.precision(2);
            s << std::fixed << v;
            return s.str();
        };
        for (std::size_t f = 0; f < ft.problems.size(); ++f) {
            o << detail::pad(ft.problems[f], lw);
            for (double v : ft.summary.per_function[f]) o << detail::pad(fixed(v), w);
            o << "\n";
        }
        o << detail::pad("Mean Rank", lw);
        for (double v : ft.summary.rank_sum) o << detail::pad(fixed(v), w);
        o << "\n" << detail::pad("Rank", lw);
        for (auto r : ft.summary.final_rank) o << detail::pad(std::to_string(r), w);
        o << "\n";
        if (!ft.excluded_problems.empty()) {
            o << "Excluded (NA for some algorithm):";
            for (const auto& p : ft.excluded_problems) o << ' ' << p;
            o << "\n";
        }
    }
    return o.str();
}

/// Reads a run directory and writes the report under `<dir>/summary`.
inline Report summarize_directory(const std::filesystem::path& dir) {
    auto rows = parse_results_csv(read_text(dir / "results.csv"), (dir / "results.csv").string());
    if (std::filesystem::exists(dir / "errors.csv")) attach_errors(rows, read_text(dir / "errors.csv"));
    const auto curves = parse_curves_csv(read_text(dir / "curves.csv"), (dir / "curves.csv").string());
    std::map<std::string, std::string> manifest;
    if (std::filesystem::exists(dir / "manifest.txt")) manifest = parse_manifest(read_text(dir / "manifest.txt"));
    Report rep = summarize(rows, curves, std::move(manifest));

    const auto out = dir / "summary";
    std::filesystem::create_directories(out / "curves");
    write_text(out / "mean_std.csv", format_mean_std_csv(rep));
    write_text(out / "wilcoxon.csv", format_wilcoxon_csv(rep));
    if (rep.friedman) write_text(out / "friedman.csv", format_friedman_csv(rep));
    else std::filesystem::remove(out / "friedman.csv");
    write_text(out / "summary.txt", format_summary_text(rep));
    for (const auto& c : rep.curves)
        write_text(out / "curves" / (detail::file_safe(c.algorithm) + "_" + detail::file_safe(c.problem) + ".csv"),
                   format_curve_csv(c));
    return rep;
}

} // namespace shrike::harness
