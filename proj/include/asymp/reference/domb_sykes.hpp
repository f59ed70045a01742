#pragma once

#include <cmath>
#include <vector>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/fit.hpp"

namespace asymp {

template <typename T>
struct DombSykesFit {
    T intercept, slope, residual;
    std::vector<T> inverse_order, ratio;
};

/// Radius-of-convergence estimates from consecutive nonzero coefficients
/// against inverse order, extrapolated to the origin by a linear fit over the
/// `fit_window` points nearest it. Series with only even terms use
/// sqrt|a_{2k} / a_{2k+2}| against 1/(k+1); dense series use |a_n / a_{n+1}|
/// against 1/(n+1).
template <typename T>
DombSykesFit<T> domb_sykes(const std::vector<T>& coeffs, int fit_window) {
    using std::abs;
    using std::sqrt;
    if (fit_window < 2) throw InvalidArgument("domb_sykes: fit window must hold at least two points");
    bool even_only = coeffs.size() > 2;
    for (std::size_t n = 1; n < coeffs.size() && even_only; n += 2) even_only = coeffs[n] == 0;

    DombSykesFit<T> out;
    const std::size_t stride = even_only ? 2 : 1;
    for (std::size_t n = 0; n + stride < coeffs.size(); n += stride) {
        if (coeffs[n] == 0 || coeffs[n + stride] == 0) continue;
        T r = abs(coeffs[n] / coeffs[n + stride]);
        if (even_only) r = sqrt(r);
        out.inverse_order.push_back(T(1) / T(n / stride + 1));
        out.ratio.push_back(r);
    }
    if (static_cast<int>(out.ratio.size()) < fit_window)
        throw InsufficientCoefficients("domb_sykes: fewer ratios than the fit window");
    std::vector<T> xs(out.inverse_order.end() - fit_window, out.inverse_order.end());
    std::vector<T> ys(out.ratio.end() - fit_window, out.ratio.end());
    auto fit = linear_fit(xs, ys);
    out.intercept = fit.intercept;
    out.slope = fit.slope;
    out.residual = fit.residual;
    return out;
}

template <typename T>
T domb_sykes_intercept(const std::vector<T>& coeffs, int fit_window) {
    return domb_sykes(coeffs, fit_window).intercept;
}

}  // namespace asymp
