#pragma once
// Monte Carlo frameworks relating inconsistency indices to estimation errors:
//   MSE   - magnitude of a single error, swept as eps^k
//   NEE   - number of equal errors, added one position at a time
//   MSOBE - many small errors plus, possibly, one big error, rounded to a scale
//
// Each run/setup/record owns a generator seeded from (master seed, index), and
// results are merged by index, so output never depends on the worker count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "pcmq/error.hpp"
#include "pcmq/error_models.hpp"
#include "pcmq/indices.hpp"
#include "pcmq/loss.hpp"
#include "pcmq/pcm.hpp"
#include "pcmq/prioritization.hpp"
#include "pcmq/random.hpp"
#include "pcmq/stats.hpp"

namespace pcmq {

// m_ij *= factor and m_ji = 1 / m_ij; i < j.
inline Pcm perturb_entry(const Pcm& m, std::size_t i, std::size_t j, double factor) {
    if (i >= j) throw ArgumentError("perturb_entry needs i < j");
    if (j >= m.order()) throw ArgumentError("perturb_entry position out of range");
    if (!(factor > 0.0)) throw ArgumentError("perturbation factor must be positive");
    const std::size_t n = m.order();
    std::vector<double> a(m.entries().begin(), m.entries().end());
    const double v = a[i * n + j] * factor;
    a[i * n + j] = v;
    a[j * n + i] = 1.0 / v;
    return Pcm(n, std::move(a));
}

// Indices and estimation errors for one matrix against a known true vector.
struct Evaluation {
    double si = 0.0;
    double gi = 0.0;
    double ki = 0.0;
    double ati = 0.0;
    double ae_rev = 0.0;
    double re_rev = 0.0;
    double ae_gm = 0.0;
    double re_gm = 0.0;
};

// Propagates RevNonConvergence.
inline Evaluation evaluate(const Pcm& pcm, const PriorityVector& truth) {
    const auto rev = rev_estimate(pcm);
    const auto gm = gm_estimate(pcm);
    const auto triads = triad_summary(pcm);
    Evaluation e;
    e.si = si_from_lambda(rev.lambda_max, pcm.order());
    e.gi = compute_gi(pcm, gm);
    e.ki = triads.max;
    e.ati = triads.mean;
    e.ae_rev = avg_absolute_error(truth, rev.weights);
    e.re_rev = avg_relative_error(truth, rev.weights);
    e.ae_gm = avg_absolute_error(truth, gm);
    e.re_gm = avg_relative_error(truth, gm);
    return e;
}

// Tracked series. Target is the judgment-error magnitude (MSE) or the number
// of errors (NEE).
enum class Series : std::size_t { Target, SI, GI, KI, ATI, AE_REV, RE_REV, AE_GM, RE_GM };
inline constexpr std::size_t kSeriesCount = 9;

inline constexpr std::array<std::string_view, kSeriesCount> kSeriesNames = {
    "target", "si", "gi", "ki", "ati", "ae_rev", "re_rev", "ae_gm", "re_gm"};

inline double series_value(const Evaluation& e, Series s) {
    switch (s) {
        case Series::SI: return e.si;
        case Series::GI: return e.gi;
        case Series::KI: return e.ki;
        case Series::ATI: return e.ati;
        case Series::AE_REV: return e.ae_rev;
        case Series::RE_REV: return e.re_rev;
        case Series::AE_GM: return e.ae_gm;
        case Series::RE_GM: return e.re_gm;
        case Series::Target: break;
    }
    return 0.0;
}

struct CoefficientStats {
    double sum = 0.0;
    double min = 1.0;
    double max = -1.0;
    std::size_t defined = 0;    // runs where the coefficient exists
    std::size_t undefined = 0;  // runs with a zero-variance series

    void add(std::optional<double> r) {
        if (!r) {
            ++undefined;
            return;
        }
        sum += *r;
        min = std::min(min, *r);
        max = std::max(max, *r);
        ++defined;
    }
    double mean() const { return defined ? sum / static_cast<double>(defined) : std::nan(""); }
};

// Mean (and range) over runs of the Spearman and Pearson coefficients for every
// pair of tracked series.
struct CorrelationSummary {
    std::string framework;
    std::string target_name;
    std::size_t n = 0;
    std::size_t runs = 0;     // runs contributing coefficients
    std::size_t skipped = 0;  // runs dropped for REV non-convergence
    std::array<std::array<CoefficientStats, kSeriesCount>, kSeriesCount> spearman{};
    std::array<std::array<CoefficientStats, kSeriesCount>, kSeriesCount> pearson{};

    const CoefficientStats& rho(Series a, Series b) const {
        return spearman[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    const CoefficientStats& r(Series a, Series b) const {
        return pearson[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
};

namespace detail {

// Splits [0, count) into contiguous ranges, one per worker.
template <class F>
void parallel_for(std::size_t count, unsigned workers, F&& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end] {
            for (std::size_t i = begin; i < end; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

using RunCoefficients = std::array<std::array<std::optional<double>, kSeriesCount>, kSeriesCount>;

struct RunOutcome {
    bool ok = false;
    RunCoefficients spearman{};
    RunCoefficients pearson{};
};

inline std::optional<double> try_corr(double (*f)(std::span<const double>, std::span<const double>),
                                      std::span<const double> x, std::span<const double> y) {
    try {
        return f(x, y);
    } catch (const UndefinedCorrelation&) {
        return std::nullopt;
    }
}

// target and one row per step; coefficients for every series pair a < b.
inline RunOutcome correlate_run(const std::vector<double>& target, const std::vector<Evaluation>& steps) {
    std::array<std::vector<double>, kSeriesCount> cols;
    cols[0] = target;
    for (std::size_t s = 1; s < kSeriesCount; ++s) {
        cols[s].reserve(steps.size());
        for (const auto& e : steps) cols[s].push_back(series_value(e, static_cast<Series>(s)));
    }
    RunOutcome out;
    out.ok = true;
    for (std::size_t a = 0; a < kSeriesCount; ++a) {
        for (std::size_t b = a + 1; b < kSeriesCount; ++b) {
            out.spearman[a][b] = out.spearman[b][a] = try_corr(&spearman, cols[a], cols[b]);
            out.pearson[a][b] = out.pearson[b][a] = try_corr(&pearson, cols[a], cols[b]);
        }
    }
    return out;
}

inline void merge_runs(CorrelationSummary& summary, const std::vector<RunOutcome>& outcomes) {
    for (const auto& o : outcomes) {
        if (!o.ok) {
            ++summary.skipped;
            continue;
        }
        ++summary.runs;
        for (std::size_t a = 0; a < kSeriesCount; ++a) {
            for (std::size_t b = 0; b < kSeriesCount; ++b) {
                if (a == b) continue;
                summary.spearman[a][b].add(o.spearman[a][b]);
                summary.pearson[a][b].add(o.pearson[a][b]);
            }
        }
    }
}

}  // namespace detail

struct MseConfig {
    std::size_t n = 4;
    std::size_t runs = 1000;
    std::size_t n_e = 25;
    double eps_lo = 1.01;
    double eps_hi = 1.075;
};

// One run: random v, one random upper-triangle position, eps ~ U[eps_lo,
// eps_hi]; step k replaces m_ij by m_ij eps^k.
inline detail::RunOutcome mse_run(const MseConfig& cfg, std::uint64_t run_seed) {
    Rng rng(run_seed);
    const auto v = random_pv(cfg.n, rng);
    const auto m = mpr_from_pv(v);
    const auto positions = upper_positions(cfg.n);
    const auto [i, j] = positions[uniform_index(rng, positions.size())];
    const double eps = uniform(rng, cfg.eps_lo, cfg.eps_hi);

    std::vector<double> target;
    std::vector<Evaluation> steps;
    try {
        for (std::size_t k = 1; k <= cfg.n_e; ++k) {
            const double factor = std::pow(eps, static_cast<double>(k));
            target.push_back(factor);
            steps.push_back(evaluate(perturb_entry(m, i, j, factor), v));
        }
    } catch (const RevNonConvergence&) {
        return {};
    }
    return detail::correlate_run(target, steps);
}

inline CorrelationSummary run_mse_sf(const MseConfig& cfg, std::uint64_t seed, unsigned workers = 1) {
    if (cfg.n < 4) throw ArgumentError("MSE framework needs n >= 4");
    if (cfg.n_e < 2) throw ArgumentError("MSE framework needs at least 2 error increments");
    if (cfg.runs == 0) throw ArgumentError("run count must be positive");
    std::vector<detail::RunOutcome> outcomes(cfg.runs);
    detail::parallel_for(cfg.runs, workers, [&](std::size_t r) {
        outcomes[r] = mse_run(cfg, derive_seed(seed, SeedStream::Run, r));
    });
    CorrelationSummary s;
    s.framework = "mse";
    s.target_name = "magnitude";
    s.n = cfg.n;
    detail::merge_runs(s, outcomes);
    return s;
}

inline CorrelationSummary run_mse_sf(std::size_t n, std::size_t n_runs, std::size_t n_e, std::uint64_t seed,
                                     unsigned workers = 1) {
    return run_mse_sf(MseConfig{n, n_runs, n_e}, seed, workers);
}

struct NeeConfig {
    std::size_t n = 4;
    std::size_t n_r = 200;  // random vectors
    std::size_t n_p = 5;    // setups per vector
    double eps_lo = 1.1;
    double eps_hi = 1.8;
};

// One setup: random permutation of the upper-triangle positions and eps_r ~
// U[eps_lo, eps_hi]; positions are disturbed cumulatively in permutation order.
inline detail::RunOutcome nee_setup(const NeeConfig& cfg, const PriorityVector& v, std::uint64_t setup_seed) {
    Rng rng(setup_seed);
    auto positions = upper_positions(cfg.n);
    std::shuffle(positions.begin(), positions.end(), rng);
    const double eps = uniform(rng, cfg.eps_lo, cfg.eps_hi);

    auto x = mpr_from_pv(v);
    std::vector<double> target;
    std::vector<Evaluation> steps;
    try {
        for (std::size_t s = 0; s < positions.size(); ++s) {
            x = perturb_entry(x, positions[s].first, positions[s].second, eps);
            target.push_back(static_cast<double>(s + 1));
            steps.push_back(evaluate(x, v));
        }
    } catch (const RevNonConvergence&) {
        return {};
    }
    return detail::correlate_run(target, steps);
}

inline CorrelationSummary run_nee_sf(const NeeConfig& cfg, std::uint64_t seed, unsigned workers = 1) {
    if (cfg.n < 4) throw ArgumentError("NEE framework needs n >= 4");
    if (cfg.n_r == 0 || cfg.n_p == 0) throw ArgumentError("NEE counts must be positive");
    const std::size_t total = cfg.n_r * cfg.n_p;
    std::vector<detail::RunOutcome> outcomes(total);
    detail::parallel_for(total, workers, [&](std::size_t s) {
        const std::size_t vector_id = s / cfg.n_p;
        Rng vrng(derive_seed(seed, SeedStream::Vector, vector_id));
        const auto v = random_pv(cfg.n, vrng);
        outcomes[s] = nee_setup(cfg, v, derive_seed(seed, SeedStream::Run, s));
    });
    CorrelationSummary s;
    s.framework = "nee";
    s.target_name = "ne";
    s.n = cfg.n;
    detail::merge_runs(s, outcomes);
    return s;
}

inline CorrelationSummary run_nee_sf(std::size_t n, std::size_t n_r, std::size_t n_p, std::uint64_t seed,
                                     unsigned workers = 1) {
    return run_nee_sf(NeeConfig{n, n_r, n_p}, seed, workers);
}

// One row of the MSOBE database.
struct SimRecord {
    std::size_t n = 0;
    std::size_t vector_id = 0;
    std::size_t perturbation_id = 0;
    ErrorDistribution distribution = ErrorDistribution::Uniform;
    bool big_error = false;
    double si = 0.0;
    double gi = 0.0;
    double ki = 0.0;
    double ati = 0.0;
    double ae_rev = 0.0;
    double re_rev = 0.0;
    double ae_gm = 0.0;
    double re_gm = 0.0;
    std::uint64_t seed = 0;
};

struct MsobeConfig {
    std::size_t n = 4;
    std::size_t total = 240'000;
    std::optional<SaatyScale> scale = SaatyScale{};  // nullopt: no rounding
    std::vector<ErrorModel> error_models = ErrorModel::standard_set();
    BigErrorModel big{};
    // 0: a fresh v per record. Otherwise v is shared by groups of this many
    // consecutive records (outer vectors x disturbance sets).
    std::size_t records_per_vector = 0;
};

struct MsobeResult {
    std::vector<SimRecord> records;
    std::size_t skipped = 0;  // REV non-convergence, excluded from records
};

// Disturbs and rounds MPR(v) for one record. Returns the matrix and whether the
// big error was applied.
inline std::pair<Pcm, bool> msobe_matrix(const MsobeConfig& cfg, const PriorityVector& v,
                                         const ErrorModel& small, Rng& rng) {
    const std::size_t n = cfg.n;
    const auto positions = upper_positions(n);
    const bool big = uniform01(rng) < cfg.big.apply_probability;
    std::size_t big_pos = positions.size();
    double big_eps = 1.0;
    if (big) {
        big_pos = uniform_index(rng, positions.size());
        big_eps = cfg.big.sample(rng);
    }
    std::vector<double> a(n * n, 1.0);
    for (std::size_t p = 0; p < positions.size(); ++p) {
        const auto [i, j] = positions[p];
        const double eps = (p == big_pos) ? big_eps : small.sample(rng);
        double x = v[i] / v[j] * eps;
        if (cfg.scale) x = round_to_scale(x, *cfg.scale);
        a[i * n + j] = x;
        a[j * n + i] = 1.0 / x;
    }
    return {Pcm(n, std::move(a)), big};
}

inline MsobeResult run_msobe_sf(const MsobeConfig& cfg, std::uint64_t seed, unsigned workers = 1) {
    if (cfg.n < 4) throw ArgumentError("MSOBE framework needs n >= 4");
    if (cfg.error_models.empty()) throw ArgumentError("at least one small-error model is required");
    if (cfg.total == 0 || cfg.total % cfg.error_models.size() != 0) {
        throw ArgumentError("total must be a positive multiple of the number of error models (" +
                            std::to_string(cfg.error_models.size()) + ")");
    }
    const std::size_t per_model = cfg.total / cfg.error_models.size();
    const std::size_t group = cfg.records_per_vector;

    std::vector<std::optional<SimRecord>> slots(cfg.total);
    detail::parallel_for(cfg.total, workers, [&](std::size_t idx) {
        const std::uint64_t rec_seed = derive_seed(seed, SeedStream::Record, idx);
        Rng rng(rec_seed);
        SimRecord rec;
        rec.n = cfg.n;
        rec.seed = rec_seed;
        const ErrorModel& small = cfg.error_models[idx / per_model];
        rec.distribution = small.distribution;
        std::optional<PriorityVector> v;
        if (group == 0) {
            rec.vector_id = idx;
            rec.perturbation_id = 0;
            v = random_pv(cfg.n, rng);
        } else {
            rec.vector_id = idx / group;
            rec.perturbation_id = idx % group;
            Rng vrng(derive_seed(seed, SeedStream::Vector, rec.vector_id));
            v = random_pv(cfg.n, vrng);
        }
        auto [pcm, big] = msobe_matrix(cfg, *v, small, rng);
        rec.big_error = big;
        try {
            const auto e = evaluate(pcm, *v);
            rec.si = e.si;
            rec.gi = e.gi;
            rec.ki = e.ki;
            rec.ati = e.ati;
            rec.ae_rev = e.ae_rev;
            rec.re_rev = e.re_rev;
            rec.ae_gm = e.ae_gm;
            rec.re_gm = e.re_gm;
        } catch (const RevNonConvergence&) {
            return;
        }
        slots[idx] = rec;
    });

    MsobeResult out;
    out.records.reserve(cfg.total);
    for (auto& s : slots) {
        if (s) {
            out.records.push_back(*s);
        } else {
            ++out.skipped;
        }
    }
    return out;
}

enum class IndexKind { SI, GI, KI, ATI };
enum class ErrorKind { AE_REV, RE_REV, AE_GM, RE_GM };

inline std::string_view to_string(IndexKind k) {
    switch (k) {
        case IndexKind::SI: return "si";
        case IndexKind::GI: return "gi";
        case IndexKind::KI: return "ki";
        case IndexKind::ATI: return "ati";
    }
    return "?";
}

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::AE_REV: return "ae_rev";
        case ErrorKind::RE_REV: return "re_rev";
        case ErrorKind::AE_GM: return "ae_gm";
        case ErrorKind::RE_GM: return "re_gm";
    }
    return "?";
}

inline IndexKind parse_index_kind(std::string_view s) {
    for (auto k : {IndexKind::SI, IndexKind::GI, IndexKind::KI, IndexKind::ATI})
        if (s == to_string(k)) return k;
    throw ArgumentError("unknown index '" + std::string(s) + "' (expected si, gi, ki or ati)");
}

inline ErrorKind parse_error_kind(std::string_view s) {
    for (auto k : {ErrorKind::AE_REV, ErrorKind::RE_REV, ErrorKind::AE_GM, ErrorKind::RE_GM})
        if (s == to_string(k)) return k;
    throw ArgumentError("unknown error '" + std::string(s) + "' (expected ae_rev, re_rev, ae_gm or re_gm)");
}

inline double index_of(const SimRecord& r, IndexKind k) {
    switch (k) {
        case IndexKind::SI: return r.si;
        case IndexKind::GI: return r.gi;
        case IndexKind::KI: return r.ki;
        case IndexKind::ATI: return r.ati;
    }
    return 0.0;
}

inline double error_of(const SimRecord& r, ErrorKind k) {
    switch (k) {
        case ErrorKind::AE_REV: return r.ae_rev;
        case ErrorKind::RE_REV: return r.re_rev;
        case ErrorKind::AE_GM: return r.ae_gm;
        case ErrorKind::RE_GM: return r.re_gm;
    }
    return 0.0;
}

inline std::vector<ClassSummary> summarize_classes(std::span<const SimRecord> records, IndexKind index,
                                                   ErrorKind error, std::size_t n_classes) {
    if (records.empty()) throw ArgumentError("no records to summarize");
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(records.size());
    y.reserve(records.size());
    for (const auto& r : records) {
        x.push_back(index_of(r, index));
        y.push_back(error_of(r, error));
    }
    return summarize_classes(x, y, n_classes);
}

}  // namespace pcmq
