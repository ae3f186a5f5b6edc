#pragma once
// Priority-vector estimators: principal right eigenvector (REV) and row
// geometric mean (GM).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcmq/error.hpp"
#include "pcmq/pcm.hpp"

namespace pcmq {

inline constexpr double kRevTolerance = 1e-12;
inline constexpr std::size_t kRevMaxIterations = 10'000;

struct RevResult {
    PriorityVector weights;
    double lambda_max;
    std::size_t iterations;
    double residual;  // max |(A w)_i - lambda_max w_i|
};

// Power iteration ran out of iterations. Carries the last iterate.
class RevNonConvergence : public std::runtime_error {
public:
    RevNonConvergence(std::vector<double> last_iterate, double residual, std::size_t iterations)
        : std::runtime_error("REV power iteration did not converge after " +
                             std::to_string(iterations) + " iterations (residual " +
                             std::to_string(residual) + ")"),
          last_iterate_(std::move(last_iterate)),
          residual_(residual) {}

    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> last_iterate_;
    double residual_;
};

namespace detail {

inline void mat_vec(const Pcm& a, const std::vector<double>& w, std::vector<double>& out) {
    const std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = a.row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += r[j] * w[j];
        out[i] = s;
    }
}

}  // namespace detail

// Power iteration from the all-ones start, renormalized by the vector sum.
// Stops once both the successive-iterate max difference and the eigen-residual
// are within tol. lambda_max is the mean of (A w)_i / w_i at the final iterate.
inline RevResult rev_estimate(const Pcm& pcm, double tol = kRevTolerance,
                              std::size_t max_iter = kRevMaxIterations) {
    if (!(tol > 0.0)) throw ArgumentError("REV tolerance must be positive");
    const std::size_t n = pcm.order();
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    std::vector<double> x(n);
    std::vector<double> aw(n);
    double residual = std::numeric_limits<double>::infinity();

    for (std::size_t it = 1; it <= max_iter; ++it) {
        detail::mat_vec(pcm, w, x);
        double sum = 0.0;
        for (double xi : x) sum += xi;
        double step = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] /= sum;
            step = std::max(step, std::abs(x[i] - w[i]));
        }
        w.swap(x);

        detail::mat_vec(pcm, w, aw);
        double lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) lambda += aw[i] / w[i];
        lambda /= static_cast<double>(n);
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(aw[i] - lambda * w[i]));

        if (step <= tol && residual <= tol) {
            return RevResult{PriorityVector::normalized(std::move(w)), lambda, it, residual};
        }
    }
    throw RevNonConvergence(std::move(w), residual, max_iter);
}

// w_i proportional to the geometric mean of row i.
inline PriorityVector gm_estimate(const Pcm& pcm) {
    const std::size_t n = pcm.order();
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        double log_sum = 0.0;
        for (double a : pcm.row(i)) log_sum += std::log(a);
        g[i] = std::exp(log_sum / static_cast<double>(n));
    }
    return PriorityVector::normalized(std::move(g));
}

}  // namespace pcmq
