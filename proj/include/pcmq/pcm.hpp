#pragma once
// Pairwise comparison matrices, priority vectors and the Saaty judgment scale.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcmq/error.hpp"

namespace pcmq {

inline constexpr double kDefaultPredicateTol = 1e-9;
inline constexpr double kPvSumTol = 1e-9;
inline constexpr double kDiagonalTol = 1e-12;

// Normalized, strictly positive weights over n >= 3 alternatives.
class PriorityVector {
public:
    explicit PriorityVector(std::vector<double> weights) : w_(std::move(weights)) {
        if (w_.size() < 3) {
            throw ArgumentError("priority vector needs at least 3 weights, got " +
                                std::to_string(w_.size()));
        }
        double sum = 0.0;
        for (double x : w_) {
            if (!(x > 0.0) || !std::isfinite(x)) {
                throw ArgumentError("priority weights must be finite and positive");
            }
            sum += x;
        }
        if (std::abs(sum - 1.0) > kPvSumTol) {
            throw ArgumentError("priority weights must sum to 1 (sum = " + std::to_string(sum) + ")");
        }
    }

    // Scales positive raw weights to sum 1.
    static PriorityVector normalized(std::vector<double> raw) {
        const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
        if (!(sum > 0.0)) throw ArgumentError("cannot normalize weights with non-positive sum");
        for (double& x : raw) x /= sum;
        return PriorityVector(std::move(raw));
    }

    static PriorityVector uniform(std::size_t n) {
        return normalized(std::vector<double>(n, 1.0));
    }

    std::size_t size() const noexcept { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    std::span<const double> weights() const noexcept { return w_; }
    auto begin() const noexcept { return w_.begin(); }
    auto end() const noexcept { return w_.end(); }

    // Component i of the result is component perm[i] of this vector.
    PriorityVector permuted(std::span<const std::size_t> perm) const {
        std::vector<double> out(w_.size());
        for (std::size_t i = 0; i < perm.size(); ++i) out[i] = w_.at(perm[i]);
        return PriorityVector(std::move(out));
    }

    friend bool operator==(const PriorityVector&, const PriorityVector&) = default;

private:
    std::vector<double> w_;
};

// Dense n x n matrix of positive judged ratios with a unit diagonal.
class Pcm {
public:
    Pcm(std::size_t n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {
        if (n_ == 0) throw ArgumentError("matrix order must be positive");
        if (a_.size() != n_ * n_) {
            throw ArgumentError("expected " + std::to_string(n_ * n_) + " entries, got " +
                                std::to_string(a_.size()));
        }
        for (double x : a_) {
            if (!(x > 0.0) || !std::isfinite(x)) {
                throw ArgumentError("matrix entries must be finite and positive");
            }
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (std::abs((*this)(i, i) - 1.0) > kDiagonalTol) {
                throw ArgumentError("diagonal entry " + std::to_string(i + 1) + " is not 1");
            }
        }
    }

    static Pcm from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        const std::size_t n = rows.size();
        std::vector<double> a;
        a.reserve(n * n);
        for (const auto& r : rows) {
            if (r.size() != n) throw ArgumentError("matrix rows must all have length " + std::to_string(n));
            a.insert(a.end(), r.begin(), r.end());
        }
        return Pcm(n, std::move(a));
    }

    static Pcm identity(std::size_t n) { return Pcm(n, std::vector<double>(n * n, 1.0)); }

    std::size_t order() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::span<const double> entries() const noexcept { return a_; }
    std::span<const double> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

    // Simultaneous row/column permutation: result(i, j) = this(perm[i], perm[j]).
    Pcm permuted(std::span<const std::size_t> perm) const {
        if (perm.size() != n_) throw ArgumentError("permutation length does not match matrix order");
        std::vector<double> out(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i * n_ + j] = (*this)(perm[i], perm[j]);
        return Pcm(n_, std::move(out));
    }

    friend bool operator==(const Pcm&, const Pcm&) = default;

private:
    std::size_t n_;
    std::vector<double> a_;
};

// The 17-value Saaty catalogue {1/9, ..., 1/2, 1, 2, ..., 9}, ascending.
class SaatyScale {
public:
    static constexpr std::size_t kSize = 17;

    SaatyScale() {
        for (int k = 9; k >= 2; --k) values_[9 - k] = 1.0 / k;
        for (int k = 1; k <= 9; ++k) values_[7 + k] = static_cast<double>(k);
    }

    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    static constexpr std::size_t size() noexcept { return kSize; }

private:
    std::array<double, kSize> values_{};
};

inline bool is_reciprocal(const Pcm& pcm, double tol = kDefaultPredicateTol) {
    const std::size_t n = pcm.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pcm(i, j) * pcm(j, i) - 1.0) > tol) return false;
    return true;
}

// First (i, j), i < j, violating reciprocity, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> first_non_reciprocal(
    const Pcm& pcm, double tol = kDefaultPredicateTol) {
    const std::size_t n = pcm.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pcm(i, j) * pcm(j, i) - 1.0) > tol) return std::pair{i, j};
    return std::nullopt;
}

inline bool is_consistent(const Pcm& pcm, double tol = kDefaultPredicateTol) {
    if (!is_reciprocal(pcm, tol)) return false;
    const std::size_t n = pcm.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (std::abs(pcm(i, j) * pcm(j, k) - pcm(i, k)) > tol) return false;
    return true;
}

// Matrix of true priority ratios v_i / v_j.
inline Pcm mpr_from_pv(const PriorityVector& v) {
    const std::size_t n = v.size();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = (i == j) ? 1.0 : v[i] / v[j];
    return Pcm(n, std::move(a));
}

// Nearest scale value by absolute difference. Distances equal up to a relative
// 1e-9 count as a tie and go to the larger value, so ratios such as 0.3/0.2
// that miss an exact midpoint by one ulp still round upward.
inline double round_to_scale(double x, const SaatyScale& scale = {}) {
    if (!(x > 0.0)) throw ArgumentError("round_to_scale needs a positive value");
    const auto vals = scale.values();
    const auto hi = std::lower_bound(vals.begin(), vals.end(), x);
    if (hi == vals.begin()) return vals.front();
    if (hi == vals.end()) return vals.back();
    const double upper = *hi;
    const double lower = *(hi - 1);
    const double d_up = upper - x;
    const double d_lo = x - lower;
    const double tie_band = 1e-9 * std::max(1.0, x);
    return (d_up <= d_lo + tie_band) ? upper : lower;
}

// Rounds the upper triangle to the scale and rebuilds the lower triangle from
// exact reciprocals. The lower triangle of the input is ignored.
inline Pcm round_pcm(const Pcm& pcm, const SaatyScale& scale = {}) {
    const std::size_t n = pcm.order();
    std::vector<double> a(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = round_to_scale(pcm(i, j), scale);
            a[i * n + j] = r;
            a[j * n + i] = 1.0 / r;
        }
    }
    return Pcm(n, std::move(a));
}

}  // namespace pcmq
