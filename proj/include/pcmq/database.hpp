#pragma once
// Simulation database (SimRecord rows) and correlation summaries on disk.

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcmq/error.hpp"
#include "pcmq/pcm_io.hpp"
#include "pcmq/simulation.hpp"

namespace pcmq {

enum class DatabaseFormat { Csv, Jsonl };

inline constexpr std::string_view kDatabaseHeader =
    "n,vector_id,perturbation_id,distribution,big_error,si,gi,ki,ati,ae_rev,re_rev,ae_gm,re_gm,seed";

namespace detail {

inline std::string g8(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8g", x);
    return buf;
}

// Round-trips through the same 8-digit text the CSV writer emits, so both
// formats carry identical values.
inline double r8(double x) { return std::strtod(g8(x).c_str(), nullptr); }

}  // namespace detail

inline void write_record_csv(std::ostream& out, const SimRecord& r) {
    char seed[24];
    std::snprintf(seed, sizeof seed, "%" PRIu64, r.seed);
    out << r.n << ',' << r.vector_id << ',' << r.perturbation_id << ',' << to_string(r.distribution) << ','
        << (r.big_error ? 1 : 0) << ',' << detail::g8(r.si) << ',' << detail::g8(r.gi) << ',' << detail::g8(r.ki)
        << ',' << detail::g8(r.ati) << ',' << detail::g8(r.ae_rev) << ',' << detail::g8(r.re_rev) << ','
        << detail::g8(r.ae_gm) << ',' << detail::g8(r.re_gm) << ',' << seed << '\n';
}

inline nlohmann::ordered_json record_json(const SimRecord& r) {
    return {{"n", r.n},
            {"vector_id", r.vector_id},
            {"perturbation_id", r.perturbation_id},
            {"distribution", to_string(r.distribution)},
            {"big_error", r.big_error},
            {"si", detail::r8(r.si)},
            {"gi", detail::r8(r.gi)},
            {"ki", detail::r8(r.ki)},
            {"ati", detail::r8(r.ati)},
            {"ae_rev", detail::r8(r.ae_rev)},
            {"re_rev", detail::r8(r.re_rev)},
            {"ae_gm", detail::r8(r.ae_gm)},
            {"re_gm", detail::r8(r.re_gm)},
            {"seed", r.seed}};
}

inline void write_records(std::ostream& out, std::span<const SimRecord> records, DatabaseFormat fmt) {
    if (fmt == DatabaseFormat::Csv) {
        out << kDatabaseHeader << '\n';
        for (const auto& r : records) write_record_csv(out, r);
    } else {
        for (const auto& r : records) out << record_json(r).dump() << '\n';
    }
}

namespace detail {

inline SimRecord record_from_fields(const std::vector<std::string_view>& f, std::size_t line_no) {
    const auto bad = [&](std::string_view what) {
        return DataError("database line " + std::to_string(line_no) + ": bad " + std::string(what));
    };
    if (f.size() != 14) throw DataError("database line " + std::to_string(line_no) + ": expected 14 fields");
    SimRecord r;
    long long v = 0;
    if (!parse_long(f[0], v) || v < 3) throw bad("n");
    r.n = static_cast<std::size_t>(v);
    if (!parse_long(f[1], v) || v < 0) throw bad("vector_id");
    r.vector_id = static_cast<std::size_t>(v);
    if (!parse_long(f[2], v) || v < 0) throw bad("perturbation_id");
    r.perturbation_id = static_cast<std::size_t>(v);
    try {
        r.distribution = parse_distribution(trim(f[3]));
    } catch (const ArgumentError&) {
        throw bad("distribution");
    }
    if (!parse_long(f[4], v) || (v != 0 && v != 1)) throw bad("big_error");
    r.big_error = v == 1;
    double* reals[] = {&r.si, &r.gi, &r.ki, &r.ati, &r.ae_rev, &r.re_rev, &r.ae_gm, &r.re_gm};
    constexpr std::string_view names[] = {"si", "gi", "ki", "ati", "ae_rev", "re_rev", "ae_gm", "re_gm"};
    for (std::size_t k = 0; k < 8; ++k)
        if (!parse_double(f[5 + k], *reals[k])) throw bad(names[k]);
    const auto s = trim(f[13]);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), r.seed);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad("seed");
    return r;
}

inline SimRecord record_from_json(const nlohmann::json& j, std::size_t line_no) {
    try {
        SimRecord r;
        r.n = j.at("n").get<std::size_t>();
        r.vector_id = j.at("vector_id").get<std::size_t>();
        r.perturbation_id = j.at("perturbation_id").get<std::size_t>();
        r.distribution = parse_distribution(j.at("distribution").get<std::string>());
        r.big_error = j.at("big_error").get<bool>();
        r.si = j.at("si").get<double>();
        r.gi = j.at("gi").get<double>();
        r.ki = j.at("ki").get<double>();
        r.ati = j.at("ati").get<double>();
        r.ae_rev = j.at("ae_rev").get<double>();
        r.re_rev = j.at("re_rev").get<double>();
        r.ae_gm = j.at("ae_gm").get<double>();
        r.re_gm = j.at("re_gm").get<double>();
        r.seed = j.at("seed").get<std::uint64_t>();
        return r;
    } catch (const std::exception& e) {
        throw DataError("database line " + std::to_string(line_no) + ": " + e.what());
    }
}

}  // namespace detail

// Reads either format; JSON lines are recognised by a leading '{'.
inline std::vector<SimRecord> read_records(std::istream& in) {
    std::vector<SimRecord> out;
    std::string line;
    std::size_t line_no = 0;
    bool csv_header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.front() == '{') {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(t);
            } catch (const nlohmann::json::parse_error& e) {
                throw DataError("database line " + std::to_string(line_no) + ": " + e.what());
            }
            out.push_back(detail::record_from_json(j, line_no));
            continue;
        }
        if (!csv_header_seen) {
            if (t != kDatabaseHeader) throw DataError("database: expected header '" + std::string(kDatabaseHeader) + "'");
            csv_header_seen = true;
            continue;
        }
        out.push_back(detail::record_from_fields(detail::split(t, ','), line_no));
    }
    return out;
}

// Long format, one line per unordered series pair.
inline void write_summary_csv(std::ostream& out, const CorrelationSummary& s) {
    out << "framework,n,runs,skipped,coefficient,series_a,series_b,mean,min,max,defined,undefined\n";
    for (const char* kind : {"spearman", "pearson"}) {
        const auto& grid = std::string_view(kind) == "spearman" ? s.spearman : s.pearson;
        for (std::size_t a = 0; a < kSeriesCount; ++a) {
            for (std::size_t b = a + 1; b < kSeriesCount; ++b) {
                const auto& c = grid[a][b];
                const std::string_view na = a == 0 ? std::string_view(s.target_name) : kSeriesNames[a];
                out << s.framework << ',' << s.n << ',' << s.runs << ',' << s.skipped << ',' << kind << ',' << na
                    << ',' << kSeriesNames[b] << ',';
                if (c.defined) {
                    out << detail::g8(c.mean()) << ',' << detail::g8(c.min) << ',' << detail::g8(c.max);
                } else {
                    out << ",,";
                }
                out << ',' << c.defined << ',' << c.undefined << '\n';
            }
        }
    }
}

inline nlohmann::ordered_json summary_json(const CorrelationSummary& s) {
    nlohmann::ordered_json j;
    j["framework"] = s.framework;
    j["n"] = s.n;
    j["runs"] = s.runs;
    j["skipped"] = s.skipped;
    for (const char* kind : {"spearman", "pearson"}) {
        const auto& grid = std::string_view(kind) == "spearman" ? s.spearman : s.pearson;
        nlohmann::ordered_json block;
        for (std::size_t a = 0; a < kSeriesCount; ++a) {
            const std::string na = a == 0 ? s.target_name : std::string(kSeriesNames[a]);
            for (std::size_t b = a + 1; b < kSeriesCount; ++b) {
                const auto& c = grid[a][b];
                block[na][std::string(kSeriesNames[b])] =
                    c.defined ? nlohmann::ordered_json(detail::r8(c.mean())) : nlohmann::ordered_json(nullptr);
            }
        }
        j[kind] = block;
    }
    return j;
}

}  // namespace pcmq
