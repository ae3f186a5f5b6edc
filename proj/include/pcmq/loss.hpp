#pragma once
// Estimation-error loss functions between a true priority vector and an estimate.

#include <cmath>
#include <cstddef>
#include <string>

#include "pcmq/error.hpp"
#include "pcmq/pcm.hpp"

namespace pcmq {

struct ErrorPair {
    double ae = 0.0;
    double re = 0.0;  // fraction, not percent
};

namespace detail {

inline void require_same_size(const PriorityVector& v, const PriorityVector& w) {
    if (v.size() != w.size()) {
        throw ArgumentError("dimension mismatch: " + std::to_string(v.size()) + " vs " +
                            std::to_string(w.size()));
    }
}

}  // namespace detail

// Mean of |v_i - w_i|.
inline double avg_absolute_error(const PriorityVector& v, const PriorityVector& w) {
    detail::require_same_size(v, w);
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += std::abs(v[i] - w[i]);
    return sum / static_cast<double>(v.size());
}

// Mean of |v_i - w_i| / v_i; v is always the true vector.
inline double avg_relative_error(const PriorityVector& v, const PriorityVector& w) {
    detail::require_same_size(v, w);
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) sum += std::abs(v[i] - w[i]) / v[i];
    return sum / static_cast<double>(v.size());
}

inline ErrorPair estimation_errors(const PriorityVector& truth, const PriorityVector& estimate) {
    return {avg_absolute_error(truth, estimate), avg_relative_error(truth, estimate)};
}

}  // namespace pcmq
