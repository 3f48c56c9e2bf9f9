#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "tzlab/core/error.hpp"

namespace tzlab::fracdyn {

/// Grunwald-Letnikov weights (-1)^j C(alpha, j), j = 0..count-1.
inline std::vector<double> gl_weights(double alpha, std::size_t count) {
    std::vector<double> w(count);
    if (count == 0) return w;
    w[0] = 1.0;
    for (std::size_t j = 1; j < count; ++j) {
        w[j] = w[j - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(j));
    }
    return w;
}

/// Grunwald-Letnikov derivative of order alpha with the lower terminal at
/// the first sample:
///   D^alpha f(t_k) = h^{-alpha} sum_{j=0..k} w_j f(t_{k-j}).
/// First-order accurate in h.
inline std::vector<double> gl_fracderiv(std::span<const double> samples, double alpha, double h) {
    if (samples.size() < 2) throw DomainError("gl_fracderiv: need at least 2 samples");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("gl_fracderiv: alpha must lie in (0, 1]");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("gl_fracderiv: step must be positive");

    const auto w = gl_weights(alpha, samples.size());
    const double scale = std::pow(h, -alpha);
    std::vector<double> out(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += w[j] * samples[k - j];
        out[k] = scale * acc;
    }
    return out;
}

}  // namespace tzlab::fracdyn
