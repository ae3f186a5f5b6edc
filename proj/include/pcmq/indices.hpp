#pragma once
// Inconsistency indices: Saaty's SI and CR, the geometric index GI, Koczkodaj's
// KI and the average triad inconsistency ATI.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcmq/error.hpp"
#include "pcmq/pcm.hpp"
#include "pcmq/prioritization.hpp"
#include "pcmq/random.hpp"

namespace pcmq {

inline constexpr std::size_t kDefaultAsiSampleSize = 500;

// (alpha, beta, chi) = (a_ik, a_ij, a_kj) for i < k < j.
struct Triad {
    double alpha;
    double beta;
    double chi;
    std::size_t i;
    std::size_t k;
    std::size_t j;
};

struct IndexReport {
    double si = 0.0;
    std::optional<double> cr;
    double gi = 0.0;
    double ki = 0.0;
    double ati = 0.0;
};

inline void to_json(nlohmann::json& j, const IndexReport& r) {
    j = nlohmann::json{{"si", r.si}, {"gi", r.gi}, {"ki", r.ki}, {"ati", r.ati}};
    j["cr"] = r.cr ? nlohmann::json(*r.cr) : nlohmann::json(nullptr);
}

namespace detail {

inline void require_reciprocal(const Pcm& pcm, const char* what) {
    if (!is_reciprocal(pcm)) throw ArgumentError(std::string(what) + " needs a reciprocal matrix");
}

inline void require_order3(const Pcm& pcm, const char* what) {
    if (pcm.order() < 3) throw ArgumentError(std::string(what) + " needs n >= 3");
}

}  // namespace detail

// (lambda_max - n) / (n - 1).
inline double si_from_lambda(double lambda_max, std::size_t n) {
    return (lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
}

inline double compute_si(const Pcm& pcm) {
    detail::require_reciprocal(pcm, "SI");
    if (pcm.order() < 2) throw ArgumentError("SI needs n >= 2");
    return si_from_lambda(rev_estimate(pcm).lambda_max, pcm.order());
}

inline double compute_cr(double si, double asi) {
    if (!(asi > 0.0)) throw ArgumentError("ASI must be positive");
    return si / asi;
}

inline double compute_cr(const Pcm& pcm, double asi) {
    if (!(asi > 0.0)) throw ArgumentError("ASI must be positive");
    return compute_si(pcm) / asi;
}

// Random reciprocal matrix with upper-triangle entries uniform over the scale.
inline Pcm random_scale_pcm(std::size_t n, Rng& rng, const SaatyScale& scale = {}) {
    std::vector<double> a(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = scale[uniform_index(rng, SaatyScale::size())];
            a[i * n + j] = v;
            a[j * n + i] = 1.0 / v;
        }
    }
    return Pcm(n, std::move(a));
}

// Mean SI over sample_size matrices drawn from `source(n, rng)`.
template <class MatrixSource>
double estimate_asi(std::size_t n, std::size_t sample_size, std::uint64_t seed, MatrixSource&& source) {
    if (n < 3) throw ArgumentError("ASI needs n >= 3");
    if (sample_size == 0) throw ArgumentError("ASI sample size must be positive");
    double sum = 0.0;
    for (std::size_t s = 0; s < sample_size; ++s) {
        Rng rng(derive_seed(seed, SeedStream::Asi, s));
        sum += compute_si(source(n, rng));
    }
    return sum / static_cast<double>(sample_size);
}

inline double estimate_asi(std::size_t n, std::size_t sample_size, std::uint64_t seed) {
    return estimate_asi(n, sample_size, seed,
                        [](std::size_t order, Rng& rng) { return random_scale_pcm(order, rng); });
}

// ln is the natural logarithm; weights come from the GM estimator.
inline double compute_gi(const Pcm& pcm, const PriorityVector& gm_weights) {
    const std::size_t n = pcm.order();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double e = std::log(pcm(i, j) * gm_weights[j] / gm_weights[i]);
            sum += e * e;
        }
    }
    return 2.0 * sum / static_cast<double>((n - 1) * (n - 2));
}

inline double compute_gi(const Pcm& pcm) {
    detail::require_order3(pcm, "GI");
    detail::require_reciprocal(pcm, "GI");
    return compute_gi(pcm, gm_estimate(pcm));
}

inline double triad_inconsistency(double alpha, double beta, double chi) {
    if (!(alpha > 0.0 && beta > 0.0 && chi > 0.0)) {
        throw ArgumentError("triad components must be positive");
    }
    const double ac = alpha * chi;
    return std::min(std::abs(1.0 - beta / ac), std::abs(1.0 - ac / beta));
}

inline double triad_inconsistency(const Triad& t) { return triad_inconsistency(t.alpha, t.beta, t.chi); }

inline std::vector<Triad> enumerate_triads(const Pcm& pcm) {
    detail::require_order3(pcm, "triad enumeration");
    const std::size_t n = pcm.order();
    std::vector<Triad> out;
    out.reserve(n * (n - 1) * (n - 2) / 6);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = k + 1; j < n; ++j)
                out.push_back(Triad{pcm(i, k), pcm(i, j), pcm(k, j), i, k, j});
    return out;
}

struct TriadSummary {
    double max = 0.0;
    double mean = 0.0;
};

// KI and ATI in a single pass over the triads.
inline TriadSummary triad_summary(const Pcm& pcm) {
    const std::size_t n = pcm.order();
    double max_ti = 0.0;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = k + 1; j < n; ++j) {
                const double ti = triad_inconsistency(pcm(i, k), pcm(i, j), pcm(k, j));
                max_ti = std::max(max_ti, ti);
                sum += ti;
                ++count;
            }
    return {max_ti, sum / static_cast<double>(count)};
}

inline double compute_ki(const Pcm& pcm) {
    detail::require_order3(pcm, "KI");
    detail::require_reciprocal(pcm, "KI");
    return triad_summary(pcm).max;
}

inline double compute_ati(const Pcm& pcm) {
    detail::require_order3(pcm, "ATI");
    detail::require_reciprocal(pcm, "ATI");
    return triad_summary(pcm).mean;
}

// All indices; CR only when an ASI value is supplied.
inline IndexReport compute_indices(const Pcm& pcm, std::optional<double> asi = std::nullopt) {
    detail::require_order3(pcm, "index report");
    detail::require_reciprocal(pcm, "index report");
    IndexReport r;
    r.si = si_from_lambda(rev_estimate(pcm).lambda_max, pcm.order());
    if (asi) r.cr = compute_cr(r.si, *asi);
    r.gi = compute_gi(pcm, gm_estimate(pcm));
    const auto t = triad_summary(pcm);
    r.ki = t.max;
    r.ati = t.mean;
    return r;
}

}  // namespace pcmq
