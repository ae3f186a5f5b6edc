#pragma once
// Correlation coefficients, empirical quantiles and quantile-based class binning.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcmq/error.hpp"

namespace pcmq {

// Product-moment correlation.
inline double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ArgumentError("pearson: sequences differ in length");
    if (x.size() < 2) throw ArgumentError("pearson: need at least 2 observations");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw UndefinedCorrelation("correlation undefined: zero variance");
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// 1-based ranks; tied values share the average of the ranks they span.
inline std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(x.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + 1 + j);  // mean of ranks i+1 .. j
        for (std::size_t k = i; k < j; ++k) ranks[order[k]] = avg;
        i = j;
    }
    return ranks;
}

// Pearson correlation of average ranks.
inline double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ArgumentError("spearman: sequences differ in length");
    if (x.size() < 2) throw ArgumentError("spearman: need at least 2 observations");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

// Linear interpolation between order statistics at h = (N - 1) p (0-based),
// i.e. the "type 7" estimator. `sorted` must be ascending.
inline double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw ArgumentError("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("quantile order must lie in [0, 1]");
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline double quantile(std::span<const double> sample, double p) {
    if (sample.empty()) throw ArgumentError("quantile of an empty sample");
    if (!(p > 0.0 && p < 1.0)) throw ArgumentError("quantile order must lie in (0, 1)");
    std::vector<double> s(sample.begin(), sample.end());
    std::sort(s.begin(), s.end());
    return quantile_sorted(s, p);
}

// Cut points 0 = b_0 < b_1 < ... < b_{N_C} = +inf. Class c (1-based) is the
// half-open interval [b_{c-1}, b_c).
struct ClassPartition {
    std::vector<double> boundaries;
    std::size_t n_classes = 0;

    double lower(std::size_t class_index) const { return boundaries.at(class_index - 1); }
    double upper(std::size_t class_index) const { return boundaries.at(class_index); }

    // Total on the reals: values below b_1 (including tiny negative round-off)
    // land in class 1, everything from b_{N_C - 1} upward in class N_C.
    std::size_t locate(double value) const {
        const auto it = std::upper_bound(boundaries.begin() + 1, boundaries.end() - 1, value);
        return static_cast<std::size_t>(it - boundaries.begin());
    }
};

// First class up to the 1/N_C quantile, last class from the 1 - 1/N_C
// quantile on, and N_C - 2 equal-width classes in between.
inline ClassPartition make_partition(std::span<const double> index_values, std::size_t n_classes) {
    if (n_classes < 3) throw ArgumentError("need at least 3 classes");
    if (index_values.size() < n_classes) {
        throw ArgumentError("sample of " + std::to_string(index_values.size()) + " values is smaller than " +
                            std::to_string(n_classes) + " classes");
    }
    std::vector<double> s(index_values.begin(), index_values.end());
    std::sort(s.begin(), s.end());
    const double nc = static_cast<double>(n_classes);
    const double q_lo = quantile_sorted(s, 1.0 / nc);
    const double q_hi = quantile_sorted(s, 1.0 - 1.0 / nc);
    if (!(q_hi > q_lo)) {
        throw PartitionError("degenerate sample: quantiles of order 1/N_C and 1-1/N_C coincide");
    }
    if (!(q_lo > 0.0)) {
        throw PartitionError("first class would be empty: quantile of order 1/N_C is not positive");
    }
    ClassPartition p;
    p.n_classes = n_classes;
    p.boundaries.reserve(n_classes + 1);
    p.boundaries.push_back(0.0);
    const double width = (q_hi - q_lo) / (nc - 2.0);
    for (std::size_t c = 0; c + 2 < n_classes; ++c) p.boundaries.push_back(q_lo + width * static_cast<double>(c));
    p.boundaries.push_back(q_hi);
    p.boundaries.push_back(std::numeric_limits<double>::infinity());
    return p;
}

struct ClassSummary {
    std::size_t class_index = 0;  // 1-based
    double lower = 0.0;
    double upper = 0.0;
    std::size_t count = 0;
    // Absent when the class is empty.
    std::optional<double> mean_index_value;
    std::optional<double> q10;
    std::optional<double> median;
    std::optional<double> q90;
    std::optional<double> mean_error;
};

inline std::vector<ClassSummary> summarize_classes(std::span<const double> index_values,
                                                   std::span<const double> error_values,
                                                   const ClassPartition& partition) {
    if (index_values.size() != error_values.size()) {
        throw ArgumentError("index and error samples differ in length");
    }
    const std::size_t nc = partition.n_classes;
    std::vector<std::vector<double>> errors(nc);
    std::vector<double> index_sum(nc, 0.0);
    for (std::size_t r = 0; r < index_values.size(); ++r) {
        const std::size_t c = partition.locate(index_values[r]);
        errors[c - 1].push_back(error_values[r]);
        index_sum[c - 1] += index_values[r];
    }
    std::vector<ClassSummary> out(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        auto& s = out[c];
        s.class_index = c + 1;
        s.lower = partition.boundaries[c];
        s.upper = partition.boundaries[c + 1];
        s.count = errors[c].size();
        if (s.count == 0) continue;
        auto& e = errors[c];
        std::sort(e.begin(), e.end());
        const double cnt = static_cast<double>(s.count);
        s.mean_index_value = index_sum[c] / cnt;
        s.q10 = quantile_sorted(e, 0.1);
        s.median = quantile_sorted(e, 0.5);
        s.q90 = quantile_sorted(e, 0.9);
        s.mean_error = std::accumulate(e.begin(), e.end(), 0.0) / cnt;
    }
    return out;
}

inline std::vector<ClassSummary> summarize_classes(std::span<const double> index_values,
                                                   std::span<const double> error_values,
                                                   std::size_t n_classes) {
    return summarize_classes(index_values, error_values, make_partition(index_values, n_classes));
}

enum class ClassStatistic { Mean, Q10, Median, Q90 };

inline std::optional<double> statistic_of(const ClassSummary& s, ClassStatistic which) {
    switch (which) {
        case ClassStatistic::Mean: return s.mean_error;
        case ClassStatistic::Q10: return s.q10;
        case ClassStatistic::Median: return s.median;
        case ClassStatistic::Q90: return s.q90;
    }
    return std::nullopt;
}

struct ClassCorrelation {
    double spearman = 0.0;
    double pearson = 0.0;
};

// Correlation between per-class mean index values and one error statistic,
// taken over the populated classes.
inline ClassCorrelation class_correlation(std::span<const ClassSummary> classes, ClassStatistic which) {
    std::vector<double> x;
    std::vector<double> y;
    for (const auto& c : classes) {
        if (c.count == 0) continue;
        x.push_back(*c.mean_index_value);
        y.push_back(*statistic_of(c, which));
    }
    return {spearman(x, y), pearson(x, y)};
}

}  // namespace pcmq
