#pragma once

/**
 * @file fit.hpp
 * @brief Cole-Cole parameter recovery from an impedance spectrum.
 *
 * Loss: sum_k |Z(omega_k; theta) - z_k|^2 / |z_k|^2, minimized by Nelder-Mead
 * in unconstrained coordinates (logit alpha, log tau, log r_ct,
 * softplus^-1 r_s). Converged simplices are restarted from their best vertex
 * until the loss stops improving, which guards against premature collapse.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tzlab/core/error.hpp"
#include "tzlab/fitkit/nelder_mead.hpp"
#include "tzlab/fitkit/spectrum.hpp"
#include "tzlab/fracdyn/arc_fit.hpp"
#include "tzlab/fracdyn/cole_cole.hpp"

namespace tzlab::fitkit {

using fracdyn::ColeColeModel;

struct FitOptions {
    int max_iter = 20000;
    int max_polish = 8;
};

struct FitResult {
    ColeColeModel model{1.0, 1.0};
    double loss = 0.0;
    int n_iter = 0;
    bool converged = false;
    /// One-sigma estimates for (alpha, tau, r_ct, r_s) from the local
    /// Gauss-Newton curvature; NaN when the curvature is singular.
    std::array<double, 4> uncertainty{};
    std::vector<std::string> warnings;
};

namespace detail {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }
inline double logit(double p) { return std::log(p / (1.0 - p)); }
inline double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }
inline double softplus_inv(double y) { return y > 30.0 ? y : std::log(std::expm1(y)); }

inline std::vector<double> to_free(const ColeColeModel& m) {
    const double alpha = std::min(m.alpha(), 1.0 - 1e-9);
    const double r_s = std::max(m.r_s(), 1e-9 * m.r_ct());
    return {logit(alpha), std::log(m.tau()), std::log(m.r_ct()), softplus_inv(r_s)};
}

inline ColeColeModel from_free(const std::vector<double>& p) {
    return ColeColeModel(sigmoid(p[0]), std::exp(p[1]), std::exp(p[2]), softplus(p[3]));
}

inline double loss(const Spectrum& spec, double alpha, double tau, double r_ct, double r_s) {
    const ColeColeModel m(alpha, tau, r_ct, r_s);
    double sum = 0.0;
    for (const auto& p : spec.points) sum += std::norm(fracdyn::cole_cole_impedance(m, p.omega) - p.z) / std::norm(p.z);
    return sum;
}

inline double free_loss(const Spectrum& spec, const std::vector<double>& p) {
    const double alpha = sigmoid(p[0]);
    const double tau = std::exp(p[1]);
    const double r_ct = std::exp(p[2]);
    const double r_s = softplus(p[3]);
    if (!(alpha > 0.0 && alpha <= 1.0 && tau > 0.0 && std::isfinite(tau) && r_ct > 0.0 && std::isfinite(r_ct) &&
          std::isfinite(r_s))) {
        return std::numeric_limits<double>::infinity();
    }
    const double v = loss(spec, alpha, tau, r_ct, r_s);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

inline std::array<double, 4> curvature_uncertainty(const Spectrum& spec, const ColeColeModel& m, double loss_value,
                                                   bool& ill_conditioned) {
    const std::size_t n = spec.size();
    const std::array<double, 4> theta{m.alpha(), m.tau(), m.r_ct(), m.r_s()};
    auto residuals = [&](const std::array<double, 4>& t) {
        const ColeColeModel mm(t[0], t[1], t[2], t[3]);
        Eigen::VectorXd r(2 * n);
        for (std::size_t k = 0; k < n; ++k) {
            const auto& p = spec.points[k];
            const cdouble d = (fracdyn::cole_cole_impedance(mm, p.omega) - p.z) / std::abs(p.z);
            r(2 * k) = d.real();
            r(2 * k + 1) = d.imag();
        }
        return r;
    };
    Eigen::MatrixXd jac(2 * n, 4);
    for (int i = 0; i < 4; ++i) {
        const double h = 1e-6 * (i == 3 ? std::max(theta[3], 1e-3 * m.r_ct()) : theta[i]);
        auto up = theta;
        auto dn = theta;
        up[i] += h;
        dn[i] -= h;
        double span = 2.0 * h;
        if (i == 0 && up[0] > 1.0) {
            up[0] = theta[0];
            span = h;
        }
        if (i == 3 && dn[3] < 0.0) {
            dn[3] = theta[3];
            span = h;
        }
        jac.col(i) = (residuals(up) - residuals(dn)) / span;
    }
    const Eigen::Matrix4d jtj = jac.transpose() * jac;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(jtj);
    const double lmax = es.eigenvalues().maxCoeff();
    const double lmin = es.eigenvalues().minCoeff();
    std::array<double, 4> out;
    ill_conditioned = !(lmin > 1e-14 * lmax);
    if (ill_conditioned) {
        out.fill(std::numeric_limits<double>::quiet_NaN());
        return out;
    }
    const double dof = std::max<double>(1.0, 2.0 * static_cast<double>(n) - 4.0);
    const Eigen::Matrix4d cov = (loss_value / dof) * jtj.inverse();
    for (int i = 0; i < 4; ++i) out[i] = std::sqrt(std::max(0.0, cov(i, i)));
    return out;
}

}  // namespace detail

/// Modulus-weighted loss of `model` against `spec`.
inline double fit_loss(const Spectrum& spec, const ColeColeModel& model) {
    return detail::loss(spec, model.alpha(), model.tau(), model.r_ct(), model.r_s());
}

/// Starting point from the spectrum's shape: r_s from min Re z, r_ct from the
/// Re z span, tau from the -Im z apex and alpha from the arc depression.
inline ColeColeModel heuristic_init(const Spectrum& spec, std::vector<std::string>* warnings = nullptr) {
    if (spec.size() < 3) throw DomainError("heuristic_init: need at least 3 points");
    double re_min = spec.points.front().z.real();
    double re_max = re_min;
    std::size_t apex = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& z = spec.points[i].z;
        re_min = std::min(re_min, z.real());
        re_max = std::max(re_max, z.real());
        if (-z.imag() > -spec.points[apex].z.imag()) apex = i;
    }
    const double scale = std::max(std::abs(re_max), std::abs(re_min));
    const double r_ct = std::max(re_max - re_min, 1e-6 * std::max(scale, 1e-300));
    const double r_s = std::max(re_min, 0.0);
    const double tau = 1.0 / spec.points[apex].omega;
    double alpha = 0.8;
    try {
        std::vector<cdouble> zs;
        zs.reserve(spec.size());
        for (const auto& p : spec.points) zs.push_back(p.z);
        const auto arc = fracdyn::arc_fit(zs);
        alpha = std::clamp(1.0 - 2.0 * arc.depression_angle / std::numbers::pi, 0.05, 0.995);
    } catch (const DegenerateError&) {
        if (warnings) warnings->push_back("arc fit degenerate; alpha initialised to 0.8");
    }
    return ColeColeModel(alpha, tau, r_ct, r_s);
}

inline FitResult fit_cole_cole(const Spectrum& spec, std::optional<ColeColeModel> init = std::nullopt,
                               const FitOptions& opt = {}) {
    if (spec.size() < 5) throw DomainError("fit_cole_cole: at least 5 points are required");
    FitResult res;
    const double decades = std::log10(spec.points.back().omega / spec.points.front().omega);
    if (decades < 2.0) res.warnings.push_back("frequency span below two decades");

    const ColeColeModel start = init ? *init : heuristic_init(spec, &res.warnings);
    auto objective = [&](const std::vector<double>& p) { return detail::free_loss(spec, p); };

    NelderMeadOptions nm;
    nm.max_iter = opt.max_iter;
    auto run = nelder_mead(objective, detail::to_free(start), nm);
    res.n_iter = run.n_iter;
    if (!run.converged) {
        const ColeColeModel perturbed(std::min(1.0, start.alpha() * 1.1), start.tau() * 1.1, start.r_ct() * 1.1,
                                      start.r_s() * 1.1);
        auto retry = nelder_mead(objective, detail::to_free(perturbed), nm);
        res.n_iter += retry.n_iter;
        if (retry.f < run.f) run = retry;
    }
    NelderMeadOptions polish = nm;
    polish.step = 0.01;
    for (int k = 0; k < opt.max_polish && run.converged; ++k) {
        auto next = nelder_mead(objective, run.x, polish);
        res.n_iter += next.n_iter;
        const bool better = next.f < run.f;
        const bool stalled = !(next.f < run.f - 1e-12 * run.f - 1e-30);
        if (better) run = next;
        if (stalled) break;
    }
    res.model = detail::from_free(run.x);
    res.loss = run.f;
    res.converged = run.converged;

    bool ill = false;
    res.uncertainty = detail::curvature_uncertainty(spec, res.model, res.loss, ill);
    if (ill) res.warnings.push_back("ill-conditioned spectrum: parameters not individually identifiable");
    return res;
}

}  // namespace tzlab::fitkit
