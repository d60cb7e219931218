#pragma once

/// @file data_file.hpp
/// @brief Plain-text numeric data files.
///
/// Layout:
///
///     # <name> <dimension> <count>
///     <value>
///     ...
///
/// One value per line, `count` lines, printed with 17 significant digits.
/// Files are checked against a recorded FNV-1a 64 checksum of their bytes.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace shrike {

struct DataFile {
    std::string name;
    std::size_t dimension = 0;
    std::vector<double> values;
};

constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// Shortest round-trip is not required here; 17 digits is what the files
/// and CSV outputs promise.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("not a number: '" + std::string(s) + "'");
    return v;
}

inline std::string format_data_file(const DataFile& file) {
    std::string out = "# " + file.name + " " + std::to_string(file.dimension) + " " +
                      std::to_string(file.values.size()) + "\n";
    for (double v : file.values) out += format_double(v) + "\n";
    return out;
}

inline DataFile parse_data_file(const std::string& text, const std::string& origin = "<memory>") {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error(origin + ": missing '# name dimension count' header");
    std::istringstream header(line.substr(2));
    DataFile file;
    std::size_t count = 0;
    if (!(header >> file.name >> file.dimension >> count))
        throw std::runtime_error(origin + ": malformed header '" + line + "'");
    file.values.reserve(count);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            file.values.push_back(parse_double(line));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(origin + ": " + e.what());
        }
    }
    if (file.values.size() != count)
        throw std::runtime_error(origin + ": header promises " + std::to_string(count) + " values, found " +
                                 std::to_string(file.values.size()));
    return file;
}

inline DataFile load_data_file(const std::filesystem::path& path, std::uint64_t expected_checksum) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open data file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (fnv1a64(text) != expected_checksum)
        throw std::runtime_error("checksum mismatch for data file " + path.string());
    return parse_data_file(text, path.string());
}

} // namespace shrike
