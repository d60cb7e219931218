#pragma once

/// @file registry.hpp
/// @brief Name -> Problem lookup for every shipped problem, and the data
/// assets (composite optima, C01/C02 minimizers) they depend on.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shrike/benchmarks.hpp"
#include "shrike/core.hpp"
#include "shrike/data_file.hpp"
#include "shrike/engineering.hpp"

namespace shrike {

struct DataAsset {
    std::string_view file;
    std::uint64_t checksum; // FNV-1a 64 of the file bytes
};

inline constexpr DataAsset kDataAssets[] = {
    {"cf1.txt", 0x71C13124F3C9C282ULL},
    {"cf2.txt", 0xE0C2DE96082292C3ULL},
    {"cf3.txt", 0x50AFA960B99C355AULL},
    {"cf4.txt", 0x1A0E4F229388B09BULL},
    {"cf5.txt", 0x555A559650692D2DULL},
    {"cf6.txt", 0x750D9EE27CDB6CA9ULL},
    {"c01_argmin.txt", 0xF35ED6AB736D8FE8ULL},
    {"c02_argmin.txt", 0xFF7E6B32F2EC9758ULL},
};

namespace detail {

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Chebyshev T_n coefficients, highest power first.
inline std::vector<double> chebyshev_coefficients(std::size_t n) {
    if (n == 0) return {1.0};
    // Work in ascending powers: T_{k+1} = 2 y T_k - T_{k-1}.
    std::vector<double> a_prev{1.0}, a_cur{0.0, 1.0};
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<double> next(a_cur.size() + 1, 0.0);
        for (std::size_t i = 0; i < a_cur.size(); ++i) next[i + 1] += 2.0 * a_cur[i];
        for (std::size_t i = 0; i < a_prev.size(); ++i) next[i] -= a_prev[i];
        a_prev = std::move(a_cur);
        a_cur = std::move(next);
    }
    return {a_cur.rbegin(), a_cur.rend()};
}

/// Closed-form inverse of the n x n Hilbert matrix, row-major.
inline std::vector<double> inverse_hilbert_matrix(int n) {
    std::vector<double> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
            const double c = binomial(i + j - 2, i - 1);
            out.push_back(sign * (i + j - 1) * binomial(n + i - 1, n - j) * binomial(n + j - 1, n - i) * c * c);
        }
    return out;
}

} // namespace detail

/// Rebuilds a shipped data file from its recipe.
inline DataFile generate_asset(std::string_view file) {
    for (std::size_t k = 0; k < 6; ++k) {
        if (file == "cf" + std::to_string(k + 1) + ".txt") {
            DataFile df{"cf" + std::to_string(k + 1) + "_optima", bench::kCompositeDimension, {}};
            for (const auto& o : bench::generate_composite_optima(k)) df.values.insert(df.values.end(), o.begin(), o.end());
            return df;
        }
    }
    if (file == "c01_argmin.txt") return {"c01_argmin", 9, detail::chebyshev_coefficients(8)};
    if (file == "c02_argmin.txt") return {"c02_argmin", 16, detail::inverse_hilbert_matrix(4)};
    throw std::invalid_argument("unknown data asset '" + std::string(file) + "'");
}

inline std::uint64_t asset_checksum(std::string_view file) {
    for (const auto& a : kDataAssets)
        if (a.file == file) return a.checksum;
    throw std::invalid_argument("unknown data asset '" + std::string(file) + "'");
}

/// SHRIKE_DATA_DIR from the environment, else the directory baked in at
/// build time, else ./data.
inline std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("SHRIKE_DATA_DIR"); env != nullptr && *env != '\0') return env;
#ifdef SHRIKE_DATA_DIR
    return SHRIKE_DATA_DIR;
#else
    return "data";
#endif
}

class Registry {
  public:
    explicit Registry(const std::filesystem::path& data_dir = default_data_dir()) {
        auto load = [&](std::string_view file) {
            return load_data_file(data_dir / file, asset_checksum(file));
        };

        for (const auto& spec : bench::classic_shifted_specs(10)) add(bench::make_shifted(spec), "shifted");

        std::vector<std::vector<Position>> optima;
        for (std::size_t k = 0; k < 6; ++k) {
            const auto df = load("cf" + std::to_string(k + 1) + ".txt");
            if (df.dimension != bench::kCompositeDimension ||
                df.values.size() != bench::kCompositeComponents * bench::kCompositeDimension)
                throw std::runtime_error("composite optima file has the wrong shape");
            std::vector<Position> pts;
            for (std::size_t c = 0; c < bench::kCompositeComponents; ++c) {
                const auto first = df.values.begin() + static_cast<std::ptrdiff_t>(c * df.dimension);
                pts.emplace_back(first, first + static_cast<std::ptrdiff_t>(df.dimension));
            }
            optima.push_back(std::move(pts));
        }
        for (auto& spec : bench::composite_specs(optima)) add(bench::make_composite(std::move(spec)), "composite");

        const auto c01 = load("c01_argmin.txt");
        const auto c02 = load("c02_argmin.txt");
        for (int f = 0; f < 10; ++f) {
            const auto id = static_cast<bench::Cec19Function>(f);
            std::optional<Position> argmin;
            if (id == bench::Cec19Function::c01) argmin = c01.values;
            if (id == bench::Cec19Function::c02) argmin = c02.values;
            add(bench::make_cec19(id, std::move(argmin)), "cec19");
        }

        add(eng::make_gear_train(), "engineering");
        add(eng::make_three_bar_truss(), "engineering");
        add(eng::make_antenna_sll(), "engineering");
        add(eng::make_fm_wave(), "engineering");
    }

    /// Names in registration order.
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }

    /// Position in names(); used for seed derivation.
    std::size_t index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) throw std::out_of_range("unknown problem '" + std::string(name) + "'");
        return it->second;
    }

    const Problem& get(std::string_view name) const { return problems_[index_of(name)]; }
    const std::string& family(std::string_view name) const { return families_[index_of(name)]; }

  private:
    void add(Problem p, std::string family) {
        index_.emplace(p.id(), problems_.size());
        names_.push_back(p.id());
        families_.push_back(std::move(family));
        problems_.push_back(std::move(p));
    }

    std::vector<Problem> problems_;
    std::vector<std::string> names_;
    std::vector<std::string> families_;
    std::map<std::string, std::size_t> index_;
};

} // namespace shrike
