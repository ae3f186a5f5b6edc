#pragma once
// Plain-text CSV reading and writing of comparison matrices. A token is either
// a decimal literal or an exact fraction "p/q".

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pcmq/error.hpp"
#include "pcmq/pcm.hpp"

namespace pcmq {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

inline bool parse_long(std::string_view s, long long& out) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

// Parses "3", "0.25", "1/7". Throws DataError on anything else.
inline double parse_judgment(std::string_view token) {
    token = detail::trim(token);
    if (const auto slash = token.find('/'); slash != std::string_view::npos) {
        long long p = 0;
        long long q = 0;
        if (!detail::parse_long(token.substr(0, slash), p) ||
            !detail::parse_long(token.substr(slash + 1), q) || q == 0) {
            throw DataError("malformed fraction '" + std::string(token) + "'");
        }
        return static_cast<double>(p) / static_cast<double>(q);
    }
    double x = 0.0;
    if (!detail::parse_double(token, x)) {
        throw DataError("malformed number '" + std::string(token) + "'");
    }
    return x;
}

// Renders 1/k exactly for the Saaty reciprocals, otherwise 6 significant digits.
inline std::string format_judgment(double x) {
    for (int k = 2; k <= 9; ++k) {
        if (x == 1.0 / k) return "1/" + std::to_string(k);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

inline Pcm read_pcm(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        std::vector<double> row;
        for (auto tok : detail::split(line, ',')) {
            try {
                row.push_back(parse_judgment(tok));
            } catch (const DataError& e) {
                throw DataError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.size();
    if (n == 0) throw DataError("empty matrix file");
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DataError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        }
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    try {
        return Pcm(n, std::move(flat));
    } catch (const ArgumentError& e) {
        throw DataError(e.what());
    }
}

inline Pcm read_pcm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open matrix file '" + path + "'");
    return read_pcm(in);
}

inline void write_pcm(std::ostream& out, const Pcm& pcm) {
    const std::size_t n = pcm.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ',';
            out << format_judgment(pcm(i, j));
        }
        out << '\n';
    }
}

inline std::string to_csv(const Pcm& pcm) {
    std::ostringstream os;
    write_pcm(os, pcm);
    return os.str();
}

}  // namespace pcmq
