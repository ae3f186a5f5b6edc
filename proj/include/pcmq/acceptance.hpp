#pragma once
// ATI-based acceptance of a PCM: locate its ATI class in a quantile table and
// compare one tabled error quantile with a user threshold.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcmq/appendix_data.hpp"
#include "pcmq/error.hpp"
#include "pcmq/indices.hpp"
#include "pcmq/pcm.hpp"
#include "pcmq/pcm_io.hpp"
#include "pcmq/simulation.hpp"
#include "pcmq/stats.hpp"

namespace pcmq {

enum class Method { REV, GM };
enum class LossKind { RE, AE };
enum class QuantileChoice { Q10, Median, Q90 };

inline std::string_view to_string(Method m) { return m == Method::REV ? "REV" : "GM"; }
inline std::string_view to_string(LossKind l) { return l == LossKind::RE ? "RE" : "AE"; }
inline std::string_view to_string(QuantileChoice q) {
    switch (q) {
        case QuantileChoice::Q10: return "q10";
        case QuantileChoice::Median: return "median";
        case QuantileChoice::Q90: return "q90";
    }
    return "?";
}

inline Method parse_method(std::string_view s) {
    if (s == "rev" || s == "REV") return Method::REV;
    if (s == "gm" || s == "GM") return Method::GM;
    throw ArgumentError("unknown method '" + std::string(s) + "' (expected rev or gm)");
}

inline QuantileChoice parse_quantile_choice(std::string_view s) {
    if (s == "q10") return QuantileChoice::Q10;
    if (s == "median") return QuantileChoice::Median;
    if (s == "q90") return QuantileChoice::Q90;
    throw ArgumentError("unknown quantile '" + std::string(s) + "' (expected q10, median or q90)");
}

struct QuantileRow {
    double class_lo = 0.0;
    double class_hi = 0.0;  // +inf on the last row
    double mean_ati = 0.0;
    double q10 = 0.0;
    double median = 0.0;
    double q90 = 0.0;
    double mean_err = 0.0;
    bool mean_suspect = false;  // printed mean contradicts the row's quantiles

    double quantile(QuantileChoice q) const {
        switch (q) {
            case QuantileChoice::Q10: return q10;
            case QuantileChoice::Median: return median;
            case QuantileChoice::Q90: return q90;
        }
        return q90;
    }
};

struct QuantileTable {
    std::size_t n = 0;
    Method method = Method::REV;
    LossKind loss = LossKind::RE;
    std::vector<QuantileRow> rows;

    // 1-based class whose [lo, hi) holds ati; the last class is unbounded.
    std::size_t locate_class(double ati) const {
        if (!(ati >= 0.0)) throw ArgumentError("ATI must be non-negative");
        if (rows.empty()) throw DataError("quantile table has no rows");
        for (std::size_t c = 1; c < rows.size(); ++c)
            if (ati < rows[c].class_lo) return c;
        return rows.size();
    }

    const QuantileRow& row(std::size_t class_index) const { return rows.at(class_index - 1); }
};

// Structural invariants; throws DataError naming the first offending row.
inline void validate_table(const QuantileTable& t) {
    const auto where = [&](std::size_t r) {
        return "table n=" + std::to_string(t.n) + " " + std::string(to_string(t.method)) + " row " +
               std::to_string(r + 1) + ": ";
    };
    if (t.rows.size() < 2) throw DataError("quantile table needs at least 2 rows");
    if (t.rows.front().class_lo != 0.0) throw DataError(where(0) + "first class must start at 0");
    if (!std::isinf(t.rows.back().class_hi)) throw DataError(where(t.rows.size() - 1) + "last class must be unbounded");
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& x = t.rows[r];
        if (r > 0 && !(x.class_lo > t.rows[r - 1].class_lo)) throw DataError(where(r) + "class bounds not increasing");
        if (r + 1 < t.rows.size() && x.class_hi != t.rows[r + 1].class_lo)
            throw DataError(where(r) + "class upper bound differs from the next lower bound");
        if (!(x.q10 <= x.median && x.median <= x.q90)) throw DataError(where(r) + "quantiles out of order");
    }
}

struct MonotonicityBreak {
    std::string column;
    std::size_t class_index;  // the class whose value drops below its predecessor
};

// Every place a quantile column decreases from one class to the next.
inline std::vector<MonotonicityBreak> monotonicity_breaks(const QuantileTable& t) {
    std::vector<MonotonicityBreak> out;
    for (auto q : {QuantileChoice::Q10, QuantileChoice::Median, QuantileChoice::Q90}) {
        for (std::size_t r = 1; r < t.rows.size(); ++r)
            if (t.rows[r].quantile(q) < t.rows[r - 1].quantile(q))
                out.push_back({std::string(to_string(q)), r + 1});
    }
    return out;
}

namespace detail {

inline double parse_table_real(std::string_view tok, std::size_t line_no) {
    tok = trim(tok);
    if (tok == "inf" || tok == "Inf" || tok == "INF") return std::numeric_limits<double>::infinity();
    double v = 0.0;
    if (!parse_double(tok, v)) {
        throw DataError("table line " + std::to_string(line_no) + ": bad number '" + std::string(tok) + "'");
    }
    return v;
}

inline std::string format_table_real(double x) {
    if (std::isinf(x)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace detail

inline constexpr std::string_view kTableHeader = "n,method,class_lo,class_hi,mean_ati,q10,median,q90,mean_err";

// Reads the table file format. Lines starting with '#' are comments; a comment
// "# loss=AE" (or RE) sets the loss of every table in the file (default RE).
// Rows are grouped into one table per (n, method) in order of appearance.
inline std::vector<QuantileTable> read_tables(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    LossKind loss = LossKind::RE;
    std::vector<QuantileTable> tables;
    std::map<std::pair<std::size_t, Method>, std::size_t> slot;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = detail::trim(line);
        if (t.empty()) continue;
        if (t.front() == '#') {
            const auto body = detail::trim(t.substr(1));
            if (body == "loss=AE") loss = LossKind::AE;
            if (body == "loss=RE") loss = LossKind::RE;
            continue;
        }
        if (!header_seen) {
            if (t != kTableHeader) throw DataError("table file: expected header '" + std::string(kTableHeader) + "'");
            header_seen = true;
            continue;
        }
        const auto f = detail::split(t, ',');
        if (f.size() != 9) throw DataError("table line " + std::to_string(line_no) + ": expected 9 fields");
        long long n = 0;
        if (!detail::parse_long(f[0], n) || n < 3) throw DataError("table line " + std::to_string(line_no) + ": bad n");
        Method m;
        try {
            m = parse_method(detail::trim(f[1]));
        } catch (const ArgumentError& e) {
            throw DataError("table line " + std::to_string(line_no) + ": " + e.what());
        }
        QuantileRow row;
        row.class_lo = detail::parse_table_real(f[2], line_no);
        row.class_hi = detail::parse_table_real(f[3], line_no);
        row.mean_ati = detail::parse_table_real(f[4], line_no);
        row.q10 = detail::parse_table_real(f[5], line_no);
        row.median = detail::parse_table_real(f[6], line_no);
        row.q90 = detail::parse_table_real(f[7], line_no);
        row.mean_err = detail::parse_table_real(f[8], line_no);
        const auto key = std::make_pair(static_cast<std::size_t>(n), m);
        auto it = slot.find(key);
        if (it == slot.end()) {
            it = slot.emplace(key, tables.size()).first;
            tables.push_back(QuantileTable{key.first, m, loss, {}});
        }
        tables[it->second].rows.push_back(row);
    }
    if (!header_seen) throw DataError("table file is empty");
    for (auto& tb : tables) {
        tb.loss = loss;
        validate_table(tb);
    }
    return tables;
}

inline void write_table(std::ostream& out, const QuantileTable& t, bool header = true) {
    if (header) out << kTableHeader << '\n';
    for (const auto& r : t.rows) {
        out << t.n << ',' << to_string(t.method) << ',' << detail::format_table_real(r.class_lo) << ','
            << detail::format_table_real(r.class_hi) << ',' << detail::format_table_real(r.mean_ati) << ','
            << detail::format_table_real(r.q10) << ',' << detail::format_table_real(r.median) << ','
            << detail::format_table_real(r.q90) << ',' << detail::format_table_real(r.mean_err) << '\n';
    }
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// All eight appendix tables, checksum-verified. The n = 7 GM table has its
// first-row mean flagged as suspect (0.945 against a q90 of 0.1225).
inline const std::vector<QuantileTable>& builtin_tables() {
    static const std::vector<QuantileTable> tables = [] {
        if (fnv1a64(kAppendixTablesCsv) != kAppendixTablesChecksum)
            throw DataError("embedded appendix tables fail their checksum");
        std::istringstream in{std::string(kAppendixTablesCsv)};
        auto t = read_tables(in);
        for (auto& tb : t)
            if (tb.n == 7 && tb.method == Method::GM) tb.rows.front().mean_suspect = true;
        return t;
    }();
    return tables;
}

inline const QuantileTable& builtin_table(std::size_t n, Method method) {
    for (const auto& t : builtin_tables())
        if (t.n == n && t.method == method) return t;
    throw ArgumentError("no built-in table for n = " + std::to_string(n) +
                        " (available: 4, 5, 6, 7); generate one with `pcmq simulate msobe --n " + std::to_string(n) +
                        " --out db.csv` followed by `pcmq report db.csv --index ati --error re_" +
                        (method == Method::REV ? "rev" : "gm") + " --table-out table.csv`");
}

// Quantile table built from a simulation database: ATI classes against the
// chosen method's AE or RE.
inline QuantileTable make_quantile_table(std::span<const SimRecord> records, Method method, LossKind loss,
                                         std::size_t n_classes = 15) {
    if (records.empty()) throw ArgumentError("no records to tabulate");
    const ErrorKind ek = method == Method::REV ? (loss == LossKind::AE ? ErrorKind::AE_REV : ErrorKind::RE_REV)
                                               : (loss == LossKind::AE ? ErrorKind::AE_GM : ErrorKind::RE_GM);
    const auto classes = summarize_classes(records, IndexKind::ATI, ek, n_classes);
    QuantileTable t{records.front().n, method, loss, {}};
    for (const auto& c : classes) {
        if (c.count == 0) {
            throw DataError("ATI class " + std::to_string(c.class_index) +
                            " is empty; simulate more records to build a table");
        }
        t.rows.push_back({c.lower, c.upper, *c.mean_index_value, *c.q10, *c.median, *c.q90, *c.mean_error, false});
    }
    validate_table(t);
    return t;
}

struct AcceptanceVerdict {
    double ati = 0.0;
    std::size_t class_index = 0;
    QuantileRow row;
    double estimated_q10 = 0.0;
    double estimated_median = 0.0;
    double estimated_q90 = 0.0;
    std::optional<double> estimated_mean;  // absent when the tabled mean is suspect
    double threshold = 0.0;
    QuantileChoice quantile_choice = QuantileChoice::Q90;
    bool accepted = false;
};

inline void to_json(nlohmann::json& j, const AcceptanceVerdict& v) {
    j = nlohmann::json{{"ati", v.ati},
                       {"class_index", v.class_index},
                       {"class_lo", v.row.class_lo},
                       {"class_hi", std::isinf(v.row.class_hi) ? nlohmann::json("inf") : nlohmann::json(v.row.class_hi)},
                       {"estimated_q10", v.estimated_q10},
                       {"estimated_median", v.estimated_median},
                       {"estimated_q90", v.estimated_q90},
                       {"threshold", v.threshold},
                       {"quantile", to_string(v.quantile_choice)},
                       {"accepted", v.accepted}};
    j["estimated_mean"] = v.estimated_mean ? nlohmann::json(*v.estimated_mean) : nlohmann::json(nullptr);
}

inline AcceptanceVerdict assess_pcm(const Pcm& pcm, Method method, double threshold, QuantileChoice choice,
                                    const QuantileTable& table) {
    if (table.n != pcm.order()) {
        throw ArgumentError("table is for n = " + std::to_string(table.n) + " but the matrix has order " +
                            std::to_string(pcm.order()));
    }
    if (table.method != method) {
        throw ArgumentError("table is for method " + std::string(to_string(table.method)) + ", not " +
                            std::string(to_string(method)));
    }
    if (!(threshold >= 0.0)) throw ArgumentError("threshold must be non-negative");
    AcceptanceVerdict v;
    v.ati = compute_ati(pcm);
    v.class_index = table.locate_class(v.ati);
    v.row = table.row(v.class_index);
    v.estimated_q10 = v.row.q10;
    v.estimated_median = v.row.median;
    v.estimated_q90 = v.row.q90;
    if (!v.row.mean_suspect) v.estimated_mean = v.row.mean_err;
    v.threshold = threshold;
    v.quantile_choice = choice;
    v.accepted = v.row.quantile(choice) <= threshold;
    return v;
}

inline AcceptanceVerdict assess_pcm(const Pcm& pcm, Method method, double threshold,
                                    QuantileChoice choice = QuantileChoice::Q90) {
    return assess_pcm(pcm, method, threshold, choice, builtin_table(pcm.order(), method));
}

}  // namespace pcmq
