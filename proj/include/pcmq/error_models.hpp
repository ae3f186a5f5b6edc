#pragma once
// Multiplicative judgment-error distributions. Small errors have mean 1 and put
// (almost) all their mass on D_S = [0.5, 1.5]; the big error is uniform on D_B.

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pcmq/error.hpp"
#include "pcmq/random.hpp"

namespace pcmq {

enum class ErrorDistribution { Gamma, LogNormal, TruncatedNormal, Uniform };

inline std::string_view to_string(ErrorDistribution d) {
    switch (d) {
        case ErrorDistribution::Gamma: return "gamma";
        case ErrorDistribution::LogNormal: return "lognormal";
        case ErrorDistribution::TruncatedNormal: return "truncnormal";
        case ErrorDistribution::Uniform: return "uniform";
    }
    return "?";
}

inline ErrorDistribution parse_distribution(std::string_view s) {
    if (s == "gamma") return ErrorDistribution::Gamma;
    if (s == "lognormal") return ErrorDistribution::LogNormal;
    if (s == "truncnormal") return ErrorDistribution::TruncatedNormal;
    if (s == "uniform") return ErrorDistribution::Uniform;
    throw ArgumentError("unknown error distribution '" + std::string(s) + "'");
}

struct ErrorModel {
    ErrorDistribution distribution = ErrorDistribution::Uniform;
    // gamma: (shape, scale); lognormal: (mu, sigma); truncnormal: (mean, sd)
    // restricted to [lo, hi]; uniform: [lo, hi].
    double p1 = 0.5;
    double p2 = 1.5;
    double lo = 0.5;
    double hi = 1.5;

    static ErrorModel gamma(double shape = 50.0) {
        return {ErrorDistribution::Gamma, shape, 1.0 / shape, 0.0, 0.0};
    }
    static ErrorModel lognormal(double sigma = 0.15) {
        return {ErrorDistribution::LogNormal, -0.5 * sigma * sigma, sigma, 0.0, 0.0};
    }
    static ErrorModel truncated_normal(double sd = 0.25, double lo = 0.5, double hi = 1.5) {
        return {ErrorDistribution::TruncatedNormal, 1.0, sd, lo, hi};
    }
    static ErrorModel uniform(double lo = 0.5, double hi = 1.5) {
        return {ErrorDistribution::Uniform, lo, hi, lo, hi};
    }

    // gamma, log-normal, truncated normal, uniform, in that order.
    static std::vector<ErrorModel> standard_set() {
        return {gamma(), lognormal(), truncated_normal(), uniform()};
    }

    double sample(Rng& rng) const {
        switch (distribution) {
            case ErrorDistribution::Gamma:
                return std::gamma_distribution<double>(p1, p2)(rng);
            case ErrorDistribution::LogNormal:
                return std::lognormal_distribution<double>(p1, p2)(rng);
            case ErrorDistribution::TruncatedNormal: {
                std::normal_distribution<double> normal(p1, p2);
                for (;;) {
                    const double x = normal(rng);
                    if (x >= lo && x <= hi) return x;
                }
            }
            case ErrorDistribution::Uniform:
                return p1 == p2 ? p1 : pcmq::uniform(rng, p1, p2);
        }
        return 1.0;
    }

    // Density; zero outside the support.
    double pdf(double x) const {
        switch (distribution) {
            case ErrorDistribution::Gamma:
                if (x <= 0.0) return 0.0;
                return std::exp((p1 - 1.0) * std::log(x) - x / p2 - std::lgamma(p1) - p1 * std::log(p2));
            case ErrorDistribution::LogNormal: {
                if (x <= 0.0) return 0.0;
                const double z = (std::log(x) - p1) / p2;
                return std::exp(-0.5 * z * z) / (x * p2 * std::sqrt(2.0 * std::numbers::pi));
            }
            case ErrorDistribution::TruncatedNormal: {
                if (x < lo || x > hi) return 0.0;
                const auto cdf = [&](double t) { return 0.5 * std::erfc(-(t - p1) / (p2 * std::numbers::sqrt2)); };
                const double z = (x - p1) / p2;
                return std::exp(-0.5 * z * z) / (p2 * std::sqrt(2.0 * std::numbers::pi)) / (cdf(hi) - cdf(lo));
            }
            case ErrorDistribution::Uniform:
                if (x < p1 || x > p2 || p1 == p2) return 0.0;
                return 1.0 / (p2 - p1);
        }
        return 0.0;
    }

    bool degenerate() const { return distribution == ErrorDistribution::Uniform && p1 == p2; }
};

namespace detail {

template <class F>
double simpson(F&& f, double a, double b, int intervals = 4000) {
    const double h = (b - a) / intervals;
    double s = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace detail

// Probability of [a, b] by quadrature of the density.
inline double probability_of(const ErrorModel& m, double a, double b) {
    if (m.degenerate()) return (m.p1 >= a && m.p1 <= b) ? 1.0 : 0.0;
    return detail::simpson([&](double x) { return m.pdf(x); }, a, b);
}

// Mean by quadrature over (0, 10].
inline double mean_of(const ErrorModel& m) {
    if (m.degenerate()) return m.p1;
    return detail::simpson([&](double x) { return x * m.pdf(x); }, 1e-12, 10.0, 20000);
}

// Mean within 1e-3 of 1 and at least 0.98 of the mass on [0.5, 1.5].
inline void validate_small_error_model(const ErrorModel& m) {
    const double mean = mean_of(m);
    if (std::abs(mean - 1.0) > 1e-3) {
        throw ArgumentError(std::string(to_string(m.distribution)) + " error model has mean " +
                            std::to_string(mean) + ", expected 1");
    }
    const double mass = probability_of(m, 0.5, 1.5);
    if (mass < 0.98) {
        throw ArgumentError(std::string(to_string(m.distribution)) + " error model puts only " +
                            std::to_string(mass) + " of its mass on [0.5, 1.5]");
    }
}

struct BigErrorModel {
    double lo = 2.0;
    double hi = 4.0;
    double apply_probability = 0.75;

    double sample(Rng& rng) const { return uniform(rng, lo, hi); }
};

}  // namespace pcmq
