#pragma once

/**
 * @file nelder_mead.hpp
 * @brief Nelder-Mead simplex minimizer (standard coefficients 1, 2, 1/2, 1/2).
 */

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace tzlab::fitkit {

struct NelderMeadOptions {
    int max_iter = 20000;
    /// Stop when every vertex is within x_tol (max-norm) of the best one ...
    double x_tol = 1e-10;
    /// ... and the f-spread is below f_tol_rel |f_best| + f_tol_abs.
    double f_tol_rel = 1e-12;
    double f_tol_abs = 1e-20;
    /// Initial simplex edge per coordinate.
    double step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f;
    int n_iter;
    bool converged;
};

inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0, const NelderMeadOptions& opt = {}) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opt.step;
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(simplex[i]);
    std::vector<std::size_t> order(n + 1);

    auto point = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
        std::vector<double> p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = c[k] + t * (w[k] - c[k]);
        return p;
    };

    int iter = 0;
    bool converged = false;
    for (; iter < opt.max_iter; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        double x_spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                x_spread = std::max(x_spread, std::abs(simplex[i][k] - simplex[best][k]));
            }
        }
        if (x_spread <= opt.x_tol && fv[worst] - fv[best] <= opt.f_tol_rel * std::abs(fv[best]) + opt.f_tol_abs) {
            converged = true;
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
        }
        const auto xr = point(centroid, simplex[worst], -1.0);
        const double fr = f(xr);
        if (fr < fv[best]) {
            const auto xe = point(centroid, simplex[worst], -2.0);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fv[worst] = fe;
            } else {
                simplex[worst] = xr;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[second]) {
            simplex[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        const bool outside = fr < fv[worst];
        const auto xc = point(centroid, outside ? xr : simplex[worst], 0.5);
        const double fc = f(xc);
        if (fc < (outside ? fr : fv[worst])) {
            simplex[worst] = xc;
            fv[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            simplex[i] = point(simplex[best], simplex[i], 0.5);
            fv[i] = f(simplex[i]);
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    return {simplex[best], fv[best], iter, converged};
}

}  // namespace tzlab::fitkit
