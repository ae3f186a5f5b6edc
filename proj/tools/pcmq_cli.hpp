#pragma once
// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit status: 0 success or accepted, 1 usage error, 2 data error, 3 rejected.

#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pcmq/acceptance.hpp"
#include "pcmq/database.hpp"
#include "pcmq/error.hpp"
#include "pcmq/error_models.hpp"
#include "pcmq/indices.hpp"
#include "pcmq/loss.hpp"
#include "pcmq/pcm.hpp"
#include "pcmq/pcm_io.hpp"
#include "pcmq/prioritization.hpp"
#include "pcmq/simulation.hpp"
#include "pcmq/stats.hpp"

namespace pcmq::cli {

inline constexpr const char* kVersion = "1.0.0";

enum Exit : int { kOk = 0, kUsage = 1, kData = 2, kReject = 3 };

enum class Format { Table, Csv, Jsonl };

inline Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    if (s == "jsonl") return Format::Jsonl;
    throw ArgumentError("unknown format '" + s + "' (expected csv, jsonl or table)");
}

namespace detail {

inline std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

inline std::string vec_text(const PriorityVector& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + fmt("%.6g", w[i]);
    return s + ")";
}

inline std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

inline PriorityVector parse_pv(const std::string& text) {
    std::vector<double> raw;
    for (auto tok : pcmq::detail::split(text, ',')) {
        double x = 0.0;
        if (!pcmq::detail::parse_double(tok, x)) throw ArgumentError("bad --true-pv entry '" + std::string(tok) + "'");
        raw.push_back(x);
    }
    if (raw.size() < 3) throw ArgumentError("--true-pv needs at least 3 entries");
    double sum = 0.0;
    for (double x : raw) {
        if (!(x > 0.0)) throw ArgumentError("--true-pv entries must be positive");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-6) throw ArgumentError("--true-pv must sum to 1 (got " + fmt("%.9g", sum) + ")");
    return PriorityVector::normalized(raw);
}

// Output goes to --out when given, otherwise to the command's stdout stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : path_(path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw DataError("cannot write '" + path + "'");
        }
        os_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& os() { return *os_; }
    void close() {
        if (file_.is_open()) {
            file_.close();
            if (!file_) throw DataError("failed writing '" + path_ + "'");
        }
    }

private:
    std::string path_;
    std::ofstream file_;
    std::ostream* os_;
};

inline void write_manifest(const std::string& out_path, const nlohmann::ordered_json& m, std::ostream& err) {
    if (out_path.empty()) {
        err << "manifest: " << m.dump() << '\n';
        return;
    }
    std::ofstream f(out_path + ".manifest.json", std::ios::binary);
    if (!f) throw DataError("cannot write '" + out_path + ".manifest.json'");
    f << m.dump(2) << '\n';
}

inline Pcm load_reciprocal(const std::string& path) {
    Pcm pcm = read_pcm_file(path);
    if (pcm.order() < 3) throw DataError("matrix order must be at least 3");
    if (auto bad = first_non_reciprocal(pcm)) {
        const auto [i, j] = *bad;
        throw DataError(fmt("matrix is not reciprocal at (%zu,%zu): a_ij = %.9g but 1/a_ji = %.9g", i + 1, j + 1,
                            pcm(i, j), 1.0 / pcm(j, i)));
    }
    return pcm;
}

}  // namespace detail

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
    std::string pcm_path;
    std::string true_pv;
    std::optional<std::uint64_t> seed;
    std::size_t asi_samples = kDefaultAsiSampleSize;
    std::string format = "table";
    std::string out;
};

inline int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(o.format);
    const Pcm pcm = detail::load_reciprocal(o.pcm_path);
    std::optional<PriorityVector> truth;
    if (!o.true_pv.empty()) {
        truth = detail::parse_pv(o.true_pv);
        if (truth->size() != pcm.order()) {
            throw ArgumentError("--true-pv has " + std::to_string(truth->size()) + " entries but the matrix has order " +
                                std::to_string(pcm.order()));
        }
    }
    const std::uint64_t seed = o.seed.value_or(detail::fresh_seed());
    if (!o.seed) err << "seed: " << seed << '\n';

    RevResult rev = [&] {
        try {
            return rev_estimate(pcm);
        } catch (const RevNonConvergence& e) {
            throw DataError(e.what());
        }
    }();
    const auto gm = gm_estimate(pcm);
    const double asi = estimate_asi(pcm.order(), o.asi_samples, seed);
    IndexReport ix;
    ix.si = si_from_lambda(rev.lambda_max, pcm.order());
    ix.cr = compute_cr(ix.si, asi);
    ix.gi = compute_gi(pcm, gm);
    const auto tri = triad_summary(pcm);
    ix.ki = tri.max;
    ix.ati = tri.mean;
    std::optional<ErrorPair> e_rev, e_gm;
    if (truth) {
        e_rev = estimation_errors(*truth, rev.weights);
        e_gm = estimation_errors(*truth, gm);
    }

    detail::Sink sink(o.out, out);
    auto& os = sink.os();
    using detail::fmt;
    if (format == Format::Table) {
        os << fmt("matrix       %s (n = %zu)\n", o.pcm_path.c_str(), pcm.order());
        os << fmt("lambda_max   %.6f\n", rev.lambda_max);
        os << fmt("SI           %.6f\n", ix.si);
        os << fmt("CR           %.6f   (ASI %.6f from %zu random matrices, seed %llu; informational only)\n", *ix.cr,
                  asi, o.asi_samples, static_cast<unsigned long long>(seed));
        os << fmt("GI           %.6f\n", ix.gi);
        os << fmt("KI           %.6f\n", ix.ki);
        os << fmt("ATI          %.6f\n", ix.ati);
        os << "REV          " << detail::vec_text(rev.weights) << '\n';
        os << "GM           " << detail::vec_text(gm) << '\n';
        if (truth) {
            os << "true v       " << detail::vec_text(*truth) << '\n';
            os << fmt("REV errors   AE %.6f   RE %.6f (%.2f%%)\n", e_rev->ae, e_rev->re, 100.0 * e_rev->re);
            os << fmt("GM errors    AE %.6f   RE %.6f (%.2f%%)\n", e_gm->ae, e_gm->re, 100.0 * e_gm->re);
        }
    } else {
        nlohmann::ordered_json j;
        j["n"] = pcm.order();
        j["lambda_max"] = rev.lambda_max;
        j["si"] = ix.si;
        j["cr"] = *ix.cr;
        j["asi"] = asi;
        j["asi_samples"] = o.asi_samples;
        j["seed"] = seed;
        j["gi"] = ix.gi;
        j["ki"] = ix.ki;
        j["ati"] = ix.ati;
        j["rev"] = rev.weights.weights();
        j["gm"] = gm.weights();
        if (truth) {
            j["ae_rev"] = e_rev->ae;
            j["re_rev"] = e_rev->re;
            j["ae_gm"] = e_gm->ae;
            j["re_gm"] = e_gm->re;
        }
        if (format == Format::Jsonl) {
            os << j.dump() << '\n';
        } else {
            os << "quantity,value\n";
            for (const auto& [k, v] : j.items()) {
                if (v.is_array()) {
                    for (std::size_t i = 0; i < v.size(); ++i) os << k << '_' << (i + 1) << ',' << fmt("%.9g", v[i].get<double>()) << '\n';
                } else if (v.is_number_float()) {
                    os << k << ',' << fmt("%.9g", v.get<double>()) << '\n';
                } else {
                    os << k << ',' << v.dump() << '\n';
                }
            }
        }
    }
    sink.close();
    return kOk;
}

// ---- simulate ----------------------------------------------------------------

struct SimulateOptions {
    std::string framework;  // mse | nee | msobe
    std::size_t n = 4;
    std::optional<std::uint64_t> seed;
    unsigned workers = 0;
    std::string format;  // empty: framework default
    std::string out;
    std::size_t runs = 1000;
    std::size_t n_e = 25;
    std::size_t n_r = 200;
    std::size_t n_p = 5;
    std::size_t total = 240'000;
    std::string distributions = "gamma,lognormal,truncnormal,uniform";
    double big_prob = 0.75;
    std::size_t per_vector = 0;
    bool no_rounding = false;
};

namespace detail {

inline void print_summary_table(std::ostream& os, const CorrelationSummary& s) {
    os << fmt("%s framework, n = %zu, %zu runs (%zu skipped)\n", s.framework.c_str(), s.n, s.runs, s.skipped);
    const Series targets[] = {Series::Target, Series::AE_REV, Series::RE_REV, Series::AE_GM, Series::RE_GM};
    const Series cols[] = {Series::SI, Series::GI, Series::KI, Series::ATI};
    for (const char* kind : {"Spearman", "Pearson"}) {
        const bool sp = kind[0] == 'S';
        os << "\nmean " << kind << " coefficients\n";
        os << fmt("%-10s %9s %9s %9s %9s %9s\n", "", "si", "gi", "ki", "ati", s.target_name.c_str());
        for (Series t : targets) {
            const std::string name = t == Series::Target ? s.target_name : std::string(kSeriesNames[static_cast<std::size_t>(t)]);
            os << fmt("%-10s", name.c_str());
            for (Series c : cols) {
                const auto& st = sp ? s.rho(c, t) : s.r(c, t);
                os << (st.defined ? fmt(" %9.3f", st.mean()) : fmt(" %9s", ""));
            }
            if (t == Series::Target) {
                os << fmt(" %9s", "");
            } else {
                const auto& st = sp ? s.rho(Series::Target, t) : s.r(Series::Target, t);
                os << (st.defined ? fmt(" %9.3f", st.mean()) : fmt(" %9s", ""));
            }
            os << '\n';
        }
    }
}

inline std::vector<ErrorModel> parse_models(const std::string& list) {
    std::vector<ErrorModel> out;
    for (auto tok : pcmq::detail::split(list, ',')) {
        switch (parse_distribution(pcmq::detail::trim(tok))) {
            case ErrorDistribution::Gamma: out.push_back(ErrorModel::gamma()); break;
            case ErrorDistribution::LogNormal: out.push_back(ErrorModel::lognormal()); break;
            case ErrorDistribution::TruncatedNormal: out.push_back(ErrorModel::truncated_normal()); break;
            case ErrorDistribution::Uniform: out.push_back(ErrorModel::uniform()); break;
        }
    }
    if (out.empty()) throw ArgumentError("--distributions is empty");
    for (const auto& m : out) validate_small_error_model(m);
    return out;
}

}  // namespace detail

inline int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
    const bool is_db = o.framework == "msobe";
    const Format format = parse_format(o.format.empty() ? (is_db || !o.out.empty() ? "csv" : "table") : o.format);
    if (is_db && format == Format::Table) throw ArgumentError("msobe writes a database; use --format csv or jsonl");
    if (o.n < 4) throw ArgumentError("--n must be at least 4");
    const std::uint64_t seed = o.seed.value_or(detail::fresh_seed());
    if (!o.seed) err << "seed: " << seed << '\n';

    nlohmann::ordered_json manifest;
    manifest["tool"] = "pcmq";
    manifest["version"] = kVersion;
    manifest["command"] = "simulate " + o.framework;
    manifest["seed"] = seed;
    nlohmann::ordered_json config;
    config["n"] = o.n;

    detail::Sink sink(o.out, out);
    if (o.framework == "mse" || o.framework == "nee") {
        CorrelationSummary s;
        if (o.framework == "mse") {
            if (o.runs == 0 || o.n_e < 2) throw ArgumentError("--runs must be positive and --ne at least 2");
            MseConfig c;
            c.n = o.n;
            c.runs = o.runs;
            c.n_e = o.n_e;
            config["runs"] = c.runs;
            config["ne"] = c.n_e;
            config["eps"] = {c.eps_lo, c.eps_hi};
            s = run_mse_sf(c, seed, o.workers);
        } else {
            if (o.n_r == 0 || o.n_p == 0) throw ArgumentError("--nr and --np must be positive");
            NeeConfig c;
            c.n = o.n;
            c.n_r = o.n_r;
            c.n_p = o.n_p;
            config["nr"] = c.n_r;
            config["np"] = c.n_p;
            config["eps"] = {c.eps_lo, c.eps_hi};
            s = run_nee_sf(c, seed, o.workers);
        }
        if (format == Format::Table) {
            detail::print_summary_table(sink.os(), s);
        } else if (format == Format::Csv) {
            write_summary_csv(sink.os(), s);
        } else {
            sink.os() << summary_json(s).dump() << '\n';
        }
        manifest["config"] = config;
        manifest["runs_used"] = s.runs;
        manifest["skipped"] = s.skipped;
    } else if (is_db) {
        if (o.total == 0) throw ArgumentError("--total must be positive");
        if (!(o.big_prob >= 0.0 && o.big_prob <= 1.0)) throw ArgumentError("--big-prob must lie in [0, 1]");
        MsobeConfig c;
        c.n = o.n;
        c.total = o.total;
        c.error_models = detail::parse_models(o.distributions);
        c.big.apply_probability = o.big_prob;
        c.records_per_vector = o.per_vector;
        if (o.no_rounding) c.scale.reset();
        config["total"] = c.total;
        config["distributions"] = o.distributions;
        config["big_prob"] = c.big.apply_probability;
        config["big_interval"] = {c.big.lo, c.big.hi};
        config["per_vector"] = c.records_per_vector;
        config["rounding"] = c.scale ? "saaty" : "none";
        const auto res = run_msobe_sf(c, seed, o.workers);
        write_records(sink.os(), res.records, format == Format::Csv ? DatabaseFormat::Csv : DatabaseFormat::Jsonl);
        manifest["config"] = config;
        manifest["records"] = res.records.size();
        manifest["skipped"] = res.skipped;
    } else {
        throw ArgumentError("unknown framework '" + o.framework + "'");
    }
    sink.close();
    manifest["format"] = format == Format::Csv ? "csv" : format == Format::Jsonl ? "jsonl" : "table";
    detail::write_manifest(o.out, manifest, err);
    return kOk;
}

// ---- report ------------------------------------------------------------------

struct ReportOptions {
    std::string database;
    std::string index = "ati";
    std::string error = "ae_rev";
    std::size_t classes = 15;
    std::string format = "table";
    std::string out;
    std::string table_out;
};

namespace detail {

struct GridCell {
    std::optional<double> spearman;
    std::optional<double> pearson;
};

// grid[statistic][index]
inline std::array<std::array<GridCell, 4>, 4> correlation_grid(std::span<const SimRecord> records, ErrorKind error,
                                                             std::size_t n_classes) {
    std::array<std::array<GridCell, 4>, 4> grid{};
    const IndexKind kinds[] = {IndexKind::SI, IndexKind::GI, IndexKind::KI, IndexKind::ATI};
    const ClassStatistic stats[] = {ClassStatistic::Mean, ClassStatistic::Q10, ClassStatistic::Median, ClassStatistic::Q90};
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<ClassSummary> cls;
        try {
            cls = summarize_classes(records, kinds[k], error, n_classes);
        } catch (const PartitionError&) {
            continue;
        }
        for (std::size_t s = 0; s < 4; ++s) {
            try {
                const auto c = class_correlation(cls, stats[s]);
                grid[s][k] = {c.spearman, c.pearson};
            } catch (const std::exception&) {
            }
        }
    }
    return grid;
}

inline std::string opt_text(const std::optional<double>& v, const char* f) { return v ? fmt(f, *v) : std::string(); }

}  // namespace detail

inline int cmd_report(const ReportOptions& o, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(o.format);
    const IndexKind index = parse_index_kind(o.index);
    const ErrorKind error = parse_error_kind(o.error);
    if (o.classes < 3) throw ArgumentError("--classes must be at least 3");
    std::ifstream in(o.database, std::ios::binary);
    if (!in) throw DataError("cannot open database '" + o.database + "'");
    const auto records = read_records(in);
    if (records.size() < o.classes) {
        throw DataError("database has " + std::to_string(records.size()) + " records, fewer than " +
                        std::to_string(o.classes) + " classes");
    }
    const auto classes = summarize_classes(records, index, error, o.classes);
    const auto grid = detail::correlation_grid(records, error, o.classes);
    const bool relative = error == ErrorKind::RE_REV || error == ErrorKind::RE_GM;
    const char* stat_names[] = {"mean", "q10", "median", "q90"};
    const char* index_names[] = {"si", "gi", "ki", "ati"};

    detail::Sink sink(o.out, out);
    auto& os = sink.os();
    using detail::fmt;
    using detail::opt_text;
    if (format == Format::Table) {
        const std::string ix(to_string(index));
        const std::string er(to_string(error));
        os << fmt("%zu records, n = %zu; classes of %s against %s\n\n", records.size(), records.front().n, ix.c_str(),
                  er.c_str());
        os << fmt("%3s  %-19s %7s %10s %10s %10s %10s %10s\n", "i", "class", "count", ("mean " + ix).c_str(), "q10",
                  "median", "q90", ("mean " + er).c_str());
        const auto val = [&](const std::optional<double>& v) {
            if (!v) return std::string();
            return relative ? fmt("%.4f (%.1f%%)", *v, 100.0 * *v) : fmt("%.4f", *v);
        };
        for (const auto& c : classes) {
            const std::string range = std::isinf(c.upper) ? fmt("%.4f - inf", c.lower) : fmt("%.4f - %.4f", c.lower, c.upper);
            os << fmt("%3zu  %-19s %7zu %10s %10s %10s %10s %10s\n", c.class_index, range.c_str(), c.count,
                      opt_text(c.mean_index_value, "%.4f").c_str(), val(c.q10).c_str(), val(c.median).c_str(),
                      val(c.q90).c_str(), val(c.mean_error).c_str());
        }
        for (const char* kind : {"Spearman", "Pearson"}) {
            os << fmt("\n%s correlation of class mean index vs statistic of %s\n", kind, er.c_str());
            os << fmt("%-8s %8s %8s %8s %8s\n", "", "si", "gi", "ki", "ati");
            for (std::size_t s = 0; s < 4; ++s) {
                os << fmt("%-8s", stat_names[s]);
                for (std::size_t k = 0; k < 4; ++k) {
                    const auto& v = kind[0] == 'S' ? grid[s][k].spearman : grid[s][k].pearson;
                    os << fmt(" %8s", opt_text(v, "%.3f").c_str());
                }
                os << '\n';
            }
        }
    } else if (format == Format::Csv) {
        os << "class,lower,upper,count,mean_index,q10,median,q90,mean_error\n";
        for (const auto& c : classes) {
            os << c.class_index << ',' << fmt("%.8g", c.lower) << ',' << (std::isinf(c.upper) ? std::string("inf") : fmt("%.8g", c.upper))
               << ',' << c.count << ',' << opt_text(c.mean_index_value, "%.8g") << ',' << opt_text(c.q10, "%.8g") << ','
               << opt_text(c.median, "%.8g") << ',' << opt_text(c.q90, "%.8g") << ',' << opt_text(c.mean_error, "%.8g") << '\n';
        }
        os << "\ncoefficient,statistic,si,gi,ki,ati\n";
        for (const char* kind : {"spearman", "pearson"}) {
            for (std::size_t s = 0; s < 4; ++s) {
                os << kind << ',' << stat_names[s];
                for (std::size_t k = 0; k < 4; ++k)
                    os << ',' << opt_text(kind[0] == 's' ? grid[s][k].spearman : grid[s][k].pearson, "%.6g");
                os << '\n';
            }
        }
    } else {
        const auto jv = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
        for (const auto& c : classes) {
            nlohmann::ordered_json j;
            j["class"] = c.class_index;
            j["lower"] = c.lower;
            j["upper"] = std::isinf(c.upper) ? nlohmann::json("inf") : nlohmann::json(c.upper);
            j["count"] = c.count;
            j["mean_index"] = jv(c.mean_index_value);
            j["q10"] = jv(c.q10);
            j["median"] = jv(c.median);
            j["q90"] = jv(c.q90);
            j["mean_error"] = jv(c.mean_error);
            os << j.dump() << '\n';
        }
        for (const char* kind : {"spearman", "pearson"}) {
            for (std::size_t s = 0; s < 4; ++s) {
                nlohmann::ordered_json j;
                j["coefficient"] = kind;
                j["statistic"] = stat_names[s];
                for (std::size_t k = 0; k < 4; ++k)
                    j[index_names[k]] = jv(kind[0] == 's' ? grid[s][k].spearman : grid[s][k].pearson);
                os << j.dump() << '\n';
            }
        }
    }
    sink.close();

    if (!o.table_out.empty()) {
        const Method method = (error == ErrorKind::AE_REV || error == ErrorKind::RE_REV) ? Method::REV : Method::GM;
        const LossKind loss = relative ? LossKind::RE : LossKind::AE;
        const auto table = make_quantile_table(records, method, loss, o.classes);
        std::ofstream t(o.table_out, std::ios::binary);
        if (!t) throw DataError("cannot write '" + o.table_out + "'");
        t << "# source=" << o.database << '\n' << "# loss=" << to_string(loss) << '\n';
        write_table(t, table);
        if (!t) throw DataError("failed writing '" + o.table_out + "'");
    }

    nlohmann::ordered_json manifest;
    manifest["tool"] = "pcmq";
    manifest["version"] = kVersion;
    manifest["command"] = "report";
    manifest["database"] = o.database;
    manifest["records"] = records.size();
    manifest["index"] = to_string(index);
    manifest["error"] = to_string(error);
    manifest["classes"] = o.classes;
    if (std::ifstream dm(o.database + ".manifest.json"); dm) {
        try {
            manifest["database_manifest"] = nlohmann::ordered_json::parse(dm);
        } catch (const nlohmann::json::exception&) {
        }
    }
    if (!o.out.empty()) detail::write_manifest(o.out, manifest, err);
    return kOk;
}

// ---- accept ------------------------------------------------------------------

struct AcceptOptions {
    std::string pcm_path;
    std::string method = "rev";
    double threshold = 0.0;
    std::string quantile = "q90";
    std::string table;
    std::string format = "table";
};

inline int cmd_accept(const AcceptOptions& o, std::ostream& out, std::ostream&) {
    const Format format = parse_format(o.format);
    const Method method = parse_method(o.method);
    const QuantileChoice choice = parse_quantile_choice(o.quantile);
    if (!(o.threshold >= 0.0)) throw ArgumentError("--threshold must be non-negative");
    const Pcm pcm = detail::load_reciprocal(o.pcm_path);

    QuantileTable table;
    std::string source;
    if (o.table.empty()) {
        try {
            table = builtin_table(pcm.order(), method);
        } catch (const ArgumentError& e) {
            throw DataError(e.what());
        }
        source = "built-in appendix table";
    } else {
        std::ifstream in(o.table, std::ios::binary);
        if (!in) throw DataError("cannot open table '" + o.table + "'");
        bool found = false;
        for (auto& t : read_tables(in)) {
            if (t.n == pcm.order() && t.method == method) {
                table = std::move(t);
                found = true;
                break;
            }
        }
        if (!found) {
            throw DataError("table '" + o.table + "' has no rows for n = " + std::to_string(pcm.order()) + ", method " +
                            std::string(to_string(method)));
        }
        source = o.table;
    }
    const auto v = assess_pcm(pcm, method, o.threshold, choice, table);

    using detail::fmt;
    if (format == Format::Table) {
        const auto& r = v.row;
        const std::string loss(to_string(table.loss));
        const std::string hi = std::isinf(r.class_hi) ? "inf" : fmt("%.4f", r.class_hi);
        out << fmt("ATI            %.6f\n", v.ati);
        out << fmt("class          %zu of %zu  [%.4f, %s)   (%s, %s, %s)\n", v.class_index, table.rows.size(),
                   r.class_lo, hi.c_str(), source.c_str(), std::string(to_string(method)).c_str(), loss.c_str());
        out << fmt("mean ATI       %.4f\n", r.mean_ati);
        out << fmt("%s q10        %.4f\n", loss.c_str(), r.q10);
        out << fmt("%s median     %.4f\n", loss.c_str(), r.median);
        out << fmt("%s q90        %.4f\n", loss.c_str(), r.q90);
        out << fmt("%s mean       %s\n", loss.c_str(),
                   v.estimated_mean ? fmt("%.4f", *v.estimated_mean).c_str() : fmt("%.4f (suspect, not used)", r.mean_err).c_str());
        out << fmt("verdict        %s  (%s %.4f %s threshold %.4f)\n", v.accepted ? "ACCEPT" : "REJECT",
                   std::string(to_string(choice)).c_str(), r.quantile(choice), v.accepted ? "<=" : ">", v.threshold);
    } else {
        nlohmann::json j = v;
        j["method"] = to_string(method);
        j["loss"] = to_string(table.loss);
        j["table"] = source;
        out << j.dump() << '\n';
    }
    return v.accepted ? kOk : kReject;
}

// ---- entry -------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Pairwise comparison matrices: prioritization, inconsistency indices, simulation and acceptance",
                 "pcmq"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    AnalyzeOptions ao;
    std::uint64_t ao_seed = 0;
    auto* analyze = app.add_subcommand("analyze", "Indices and priority estimates of one PCM file");
    analyze->add_option("pcm", ao.pcm_path, "PCM file (CSV; entries may be p/q fractions)")->required();
    analyze->add_option("--true-pv", ao.true_pv, "Known true priority vector, comma separated");
    auto* ao_seed_opt = analyze->add_option("--seed", ao_seed, "Seed for the ASI estimate (random if omitted)");
    analyze->add_option("--asi-samples", ao.asi_samples, "Random matrices in the ASI estimate")->check(CLI::PositiveNumber);
    analyze->add_option("--format", ao.format, "table, csv or jsonl")->check(CLI::IsMember({"table", "csv", "jsonl"}));
    analyze->add_option("--out", ao.out, "Output file (default stdout)");

    SimulateOptions so;
    std::uint64_t so_seed = 0;
    auto* simulate = app.add_subcommand("simulate", "Run a simulation framework");
    simulate->require_subcommand(1);
    struct FrameworkCmd {
        CLI::App* app;
        CLI::Option* seed;
    };
    std::vector<FrameworkCmd> fw;
    for (const char* name : {"mse", "nee", "msobe"}) {
        const std::string desc = std::string(name) == "mse"   ? "Magnitude of a single error"
                                 : std::string(name) == "nee" ? "Number of equal errors"
                                                              : "Many small errors and one big error (database)";
        auto* c = simulate->add_subcommand(name, desc);
        c->add_option("--n", so.n, "Matrix order")->check(CLI::Range(4, 50));
        auto* seed = c->add_option("--seed", so_seed, "Master seed (random if omitted, then recorded)");
        c->add_option("--workers", so.workers, "Worker threads (0 = all cores); output does not depend on it");
        c->add_option("--format", so.format, "csv, jsonl or table")->check(CLI::IsMember({"table", "csv", "jsonl"}));
        c->add_option("--out", so.out, "Output file (default stdout); a .manifest.json is written beside it");
        fw.push_back({c, seed});
    }
    fw[0].app->add_option("--runs", so.runs, "Runs")->check(CLI::PositiveNumber);
    fw[0].app->add_option("--ne", so.n_e, "Error increments per run")->check(CLI::Range(2, 1000000));
    fw[1].app->add_option("--nr", so.n_r, "Random priority vectors")->check(CLI::PositiveNumber);
    fw[1].app->add_option("--np", so.n_p, "Random position orders per vector")->check(CLI::PositiveNumber);
    fw[2].app->add_option("--total", so.total, "Records (a multiple of the number of distributions)")->check(CLI::PositiveNumber);
    fw[2].app->add_option("--distributions", so.distributions, "Small-error distributions, comma separated");
    fw[2].app->add_option("--big-prob", so.big_prob, "Probability of the big error")->check(CLI::Range(0.0, 1.0));
    fw[2].app->add_option("--per-vector", so.per_vector, "Records sharing one priority vector (0 = fresh vector per record)");
    fw[2].app->add_flag("--no-rounding", so.no_rounding, "Keep disturbed ratios unrounded");

    ReportOptions ro;
    auto* report = app.add_subcommand("report", "Class summaries and correlation grids from a database");
    report->add_option("database", ro.database, "Database written by simulate msobe")->required();
    report->add_option("--index", ro.index, "si, gi, ki or ati")->check(CLI::IsMember({"si", "gi", "ki", "ati"}));
    report->add_option("--error", ro.error, "ae_rev, re_rev, ae_gm or re_gm")
        ->check(CLI::IsMember({"ae_rev", "re_rev", "ae_gm", "re_gm"}));
    report->add_option("--classes", ro.classes, "Number of classes")->check(CLI::Range(3, 1000));
    report->add_option("--format", ro.format, "table, csv or jsonl")->check(CLI::IsMember({"table", "csv", "jsonl"}));
    report->add_option("--out", ro.out, "Output file (default stdout)");
    report->add_option("--table-out", ro.table_out, "Also write an acceptance table (ATI classes vs --error)");

    AcceptOptions co;
    auto* accept = app.add_subcommand("accept", "Accept or reject a PCM from its ATI class");
    accept->add_option("pcm", co.pcm_path, "PCM file")->required();
    accept->add_option("--method", co.method, "rev or gm")->check(CLI::IsMember({"rev", "gm"}));
    accept->add_option("--threshold", co.threshold, "Largest acceptable error quantile")->required();
    accept->add_option("--quantile", co.quantile, "q10, median or q90")->check(CLI::IsMember({"q10", "median", "q90"}));
    accept->add_option("--table", co.table, "Table file (default: built-in appendix tables)");
    accept->add_option("--format", co.format, "table or jsonl")->check(CLI::IsMember({"table", "jsonl"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (analyze->parsed()) {
            if (ao_seed_opt->count()) ao.seed = ao_seed;
            return cmd_analyze(ao, out, err);
        }
        if (simulate->parsed()) {
            for (auto& c : fw) {
                if (c.app->parsed()) {
                    so.framework = c.app->get_name();
                    if (c.seed->count()) so.seed = so_seed;
                }
            }
            return cmd_simulate(so, out, err);
        }
        if (report->parsed()) return cmd_report(ro, out, err);
        if (accept->parsed()) return cmd_accept(co, out, err);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    } catch (const PartitionError& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kData;
    }
    return kUsage;
}

}  // namespace pcmq::cli
