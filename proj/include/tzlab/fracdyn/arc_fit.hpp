#pragma once

/**
 * @file arc_fit.hpp
 * @brief Algebraic (Kasa) circle fit for Nyquist arcs.
 *
 * The depression angle is the angle between the real axis and the line from
 * the arc's real-axis intersection to the circle centre, measured away from
 * the arc. A capacitive arc lives in Im z < 0, so a depressed arc has its
 * centre at Im c > 0 and a positive depression angle; a full semicircle
 * (alpha = 1) gives 0. In general depression = asin(Im c / R).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>

#include <Eigen/Dense>

#include "tzlab/core/error.hpp"

namespace tzlab::fracdyn {

struct ArcFit {
    std::complex<double> center;
    double radius = 0.0;
    double depression_angle = 0.0;
    double rms_residual = 0.0;
};

inline ArcFit arc_fit(std::span<const std::complex<double>> points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    if (n < 3) throw DegenerateError("arc_fit: need at least 3 points");

    // Centre and scale the cloud so the normal equations stay well conditioned.
    std::complex<double> mean = 0.0;
    for (const auto& p : points) mean += p;
    mean /= static_cast<double>(n);
    double scale = 0.0;
    for (const auto& p : points) scale = std::max(scale, std::abs(p - mean));
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DegenerateError("arc_fit: coincident points");

    // x^2 + y^2 + D x + E y + F = 0
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto q = (points[static_cast<std::size_t>(i)] - mean) / scale;
        design(i, 0) = q.real();
        design(i, 1) = q.imag();
        design(i, 2) = 1.0;
        rhs(i) = -std::norm(q);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < 3) throw DegenerateError("arc_fit: points are collinear");
    const Eigen::Vector3d coef = qr.solve(rhs);

    const std::complex<double> c_local(-coef(0) / 2.0, -coef(1) / 2.0);
    const double r2 = std::norm(c_local) - coef(2);
    if (!(r2 > 0.0)) throw DegenerateError("arc_fit: no real circle through the points");

    ArcFit fit;
    fit.center = mean + scale * c_local;
    fit.radius = scale * std::sqrt(r2);
    if (!std::isfinite(fit.radius) || fit.radius > 1e8 * scale) {
        throw DegenerateError("arc_fit: points are (nearly) collinear");
    }

    double ss = 0.0;
    for (const auto& p : points) {
        const double d = std::abs(p - fit.center) - fit.radius;
        ss += d * d;
    }
    fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
    fit.depression_angle = std::asin(std::clamp(fit.center.imag() / fit.radius, -1.0, 1.0));
    return fit;
}

}  // namespace tzlab::fracdyn
