#pragma once

/// @file results_io.hpp
/// @brief CSV persistence of result rows and convergence curves.
///
/// results.csv  algorithm,problem,round,seed,best_fitness,feasible,evaluations,wall_ms,best_position
/// curves.csv   algorithm,problem,round,iteration,global_best
/// errors.csv   algorithm,problem,round,message   (only cells that threw)
/// manifest.txt key = value run settings read back by summarize
///
/// Reals are printed with 17 significant digits, so parsing reproduces the
/// in-memory values bit for bit. An infeasible best prints as INFEASIBLE, a
/// failed cell as ERROR.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "shrike/data_file.hpp"
#include "shrike/harness/config.hpp"
#include "shrike/harness/runner.hpp"

namespace shrike::harness {

constexpr std::string_view kResultsHeader =
    "algorithm,problem,round,seed,best_fitness,feasible,evaluations,wall_ms,best_position";
constexpr std::string_view kCurvesHeader = "algorithm,problem,round,iteration,global_best";
constexpr std::string_view kErrorsHeader = "algorithm,problem,round,message";

class CsvError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string format_fitness(const Fitness& f) {
    return f.feasible() ? format_double(f.value()) : std::string("INFEASIBLE");
}

inline Fitness parse_fitness(const std::string& s, const std::string& where) {
    if (s == "INFEASIBLE") return Fitness::infeasible();
    try {
        return Fitness(parse_double(s));
    } catch (const std::invalid_argument& e) {
        throw CsvError(where + ": " + e.what());
    }
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(std::move(cur));
    return out;
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Splits a line whose last field may be quoted.
inline std::vector<std::string> split_with_quoted_tail(const std::string& line, std::size_t plain_fields) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < plain_fields; ++i) {
        const auto comma = line.find(',', pos);
        if (comma == std::string::npos) return {};
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    std::string tail = line.substr(pos);
    if (tail.size() >= 2 && tail.front() == '"' && tail.back() == '"') {
        std::string un;
        for (std::size_t i = 1; i + 1 < tail.size(); ++i) {
            un += tail[i];
            if (tail[i] == '"' && i + 2 < tail.size() && tail[i + 1] == '"') ++i;
        }
        tail = std::move(un);
    }
    out.push_back(std::move(tail));
    return out;
}

inline std::uint64_t parse_uint(const std::string& s, const std::string& where) {
    try {
        return parse_u64(s, where);
    } catch (const ConfigError& e) {
        throw CsvError(e.what());
    }
}

inline std::vector<std::string> read_lines(std::string_view text, std::string_view header, const std::string& origin) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw CsvError(origin + ": expected header '" + std::string(header) + "'");
    std::vector<std::string> lines;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

} // namespace detail

inline std::string format_results_csv(const std::vector<ResultRow>& rows) {
    std::string out(kResultsHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += r.algorithm + ',' + r.problem + ',' + std::to_string(r.round) + ',' + std::to_string(r.seed) + ',';
        out += r.error ? std::string("ERROR") : detail::format_fitness(r.best_fitness);
        out += r.feasible ? ",true," : ",false,";
        out += std::to_string(r.evaluations) + ',' + format_double(r.wall_ms) + ',';
        for (std::size_t i = 0; i < r.best_position.size(); ++i) {
            if (i) out += ';';
            out += format_double(r.best_position[i]);
        }
        out += '\n';
    }
    return out;
}

inline std::string format_curves_csv(const std::vector<CurveRow>& curves) {
    std::string out(kCurvesHeader);
    out += '\n';
    for (const auto& c : curves)
        out += c.algorithm + ',' + c.problem + ',' + std::to_string(c.round) + ',' + std::to_string(c.iteration) + ',' +
               detail::format_fitness(c.global_best) + '\n';
    return out;
}

inline std::string format_errors_csv(const std::vector<ResultRow>& rows) {
    std::string out(kErrorsHeader);
    out += '\n';
    for (const auto& r : rows)
        if (r.error)
            out += r.algorithm + ',' + r.problem + ',' + std::to_string(r.round) + ',' + detail::quote(*r.error) + '\n';
    return out;
}

/// Error rows come back with an empty message; attach_errors fills it in.
inline std::vector<ResultRow> parse_results_csv(std::string_view text, const std::string& origin = "results.csv") {
    std::vector<ResultRow> rows;
    std::size_t n = 1;
    for (const auto& line : detail::read_lines(text, kResultsHeader, origin)) {
        const std::string where = origin + ":" + std::to_string(++n);
        auto f = detail::split(line, ',');
        if (f.size() != 9) throw CsvError(where + ": expected 9 fields, found " + std::to_string(f.size()));
        ResultRow r;
        r.algorithm = f[0];
        r.problem = f[1];
        r.round = static_cast<std::size_t>(detail::parse_uint(f[2], where));
        r.seed = detail::parse_uint(f[3], where);
        if (f[4] == "ERROR") r.error = std::string();
        else r.best_fitness = detail::parse_fitness(f[4], where);
        if (f[5] != "true" && f[5] != "false") throw CsvError(where + ": feasible must be true or false");
        r.feasible = f[5] == "true";
        r.evaluations = detail::parse_uint(f[6], where);
        try {
            r.wall_ms = parse_double(f[7]);
            if (!f[8].empty())
                for (const auto& v : detail::split(f[8], ';')) r.best_position.push_back(parse_double(v));
        } catch (const std::invalid_argument& e) {
            throw CsvError(where + ": " + e.what());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline void attach_errors(std::vector<ResultRow>& rows, std::string_view errors_text,
                          const std::string& origin = "errors.csv") {
    std::map<std::tuple<std::string, std::string, std::size_t>, std::string> msgs;
    std::size_t n = 1;
    for (const auto& line : detail::read_lines(errors_text, kErrorsHeader, origin)) {
        const std::string where = origin + ":" + std::to_string(++n);
        auto f = detail::split_with_quoted_tail(line, 3);
        if (f.size() != 4) throw CsvError(where + ": malformed line");
        msgs[{f[0], f[1], static_cast<std::size_t>(detail::parse_uint(f[2], where))}] = f[3];
    }
    for (auto& r : rows)
        if (r.error)
            if (auto it = msgs.find({r.algorithm, r.problem, r.round}); it != msgs.end()) r.error = it->second;
}

inline std::vector<CurveRow> parse_curves_csv(std::string_view text, const std::string& origin = "curves.csv") {
    std::vector<CurveRow> out;
    std::size_t n = 1;
    for (const auto& line : detail::read_lines(text, kCurvesHeader, origin)) {
        const std::string where = origin + ":" + std::to_string(++n);
        auto f = detail::split(line, ',');
        if (f.size() != 5) throw CsvError(where + ": expected 5 fields, found " + std::to_string(f.size()));
        out.push_back({f[0], f[1], static_cast<std::size_t>(detail::parse_uint(f[2], where)),
                       static_cast<std::size_t>(detail::parse_uint(f[3], where)),
                       detail::parse_fitness(f[4], where)});
    }
    return out;
}

inline std::string format_manifest(const ExperimentConfig& cfg) {
    std::string out;
    out += "rounds = " + std::to_string(cfg.rounds) + "\n";
    out += "iterations = " + std::to_string(cfg.iterations) + "\n";
    out += "base_seed = " + std::to_string(cfg.base_seed) + "\n";
    out += std::string("budget = ") + (cfg.budget == BudgetMode::evaluations ? "evaluations" : "iterations") + "\n";
    if (cfg.budget == BudgetMode::evaluations) out += "max_evaluations = " + std::to_string(cfg.max_evaluations) + "\n";
    out += std::string("record_wall_time = ") + (cfg.record_wall_time ? "true" : "false") + "\n";
    return out;
}

inline std::map<std::string, std::string> parse_manifest(std::string_view text) {
    std::map<std::string, std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        out[detail::trim(std::string_view(line).substr(0, eq))] = detail::trim(std::string_view(line).substr(eq + 1));
    }
    return out;
}

inline std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

/// Writes results.csv, curves.csv, manifest.txt and, when some cell failed,
/// errors.csv into `dir`.
inline void write_run(const std::filesystem::path& dir, const ExperimentConfig& cfg, const MatrixResult& m) {
    std::filesystem::create_directories(dir);
    write_text(dir / "results.csv", format_results_csv(m.rows));
    write_text(dir / "curves.csv", format_curves_csv(m.curves));
    write_text(dir / "manifest.txt", format_manifest(cfg));
    const bool failed = std::any_of(m.rows.begin(), m.rows.end(), [](const ResultRow& r) { return r.error.has_value(); });
    if (failed) write_text(dir / "errors.csv", format_errors_csv(m.rows));
    else std::filesystem::remove(dir / "errors.csv");
}

} // namespace shrike::harness
