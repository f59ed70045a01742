#pragma once

#include <cmath>
#include <vector>

#include "asymp/approximants/evaluate.hpp"
#include "asymp/numeric/complex.hpp"
#include "asymp/numeric/polynomial.hpp"

namespace asymp {

enum class Problem { Sakiadis, Blasius, FlierlPetviashvili };

/// G_eff = (f - C) e^{C eta / 2}.
template <typename T>
T effective_constant(const ExpSeriesApproximant<T>& a, const T& eta) {
    using std::exp;
    return (eval_approximant(a, eta).v - a.C) * exp(a.C * eta / 2);
}

/// G_eff for the Sakiadis form, Q_eff = exp(eta^2/4 + B eta/2) f'' for Blasius.
template <typename T>
T effective_constant(const OffsetReciprocalApproximant<T>& a, const T& eta) {
    using std::exp;
    auto f = eval_approximant(a, eta);
    if (a.problem == BoundaryLayer::Sakiadis) return (f.v - a.constant) * exp(a.constant * eta / 2);
    return exp(eta * eta / 4 + a.constant * eta / 2) * f.d2;
}

/// D_eff = u e^r sqrt(r).
template <typename T>
T effective_constant(const PadeReciprocalApproximant<T>& a, const T& r) {
    using std::exp;
    using std::sqrt;
    if (!(r > 0)) throw InvalidArgument("effective_constant: r must be positive");
    return eval_approximant(a, r).v * exp(r) * sqrt(r);
}

template <typename T>
struct Singularity {
    T S;
    Complex<T> eta_s;
};

template <typename T>
Singularity<T> singularity_radius(const std::vector<T>& A) {
    UnivariatePolynomial<T> d(A);
    if (d.degree() < 1) throw InvalidArgument("singularity_radius: denominator is constant");
    auto roots = poly_roots(d, precision_tol<T>(10));
    std::size_t best = 0;
    for (std::size_t i = 1; i < roots.size(); ++i)
        if (abs(roots[i]) < abs(roots[best])) best = i;
    return {abs(roots[best]), roots[best]};
}

template <typename T>
Singularity<T> singularity_radius(const OffsetReciprocalApproximant<T>& a) {
    return singularity_radius(a.A);
}

template <typename T>
Singularity<T> singularity_radius(const PadeReciprocalApproximant<T>& a) {
    return singularity_radius(a.A);
}

/// Smallest-spread window of an effective-constant sample; returns its mean.
template <typename T>
struct Plateau {
    T value, spread, x_begin, x_end;
};

template <typename T>
Plateau<T> find_plateau(const std::vector<T>& xs, const std::vector<T>& ys, const T& width) {
    using std::abs;
    if (xs.size() != ys.size() || xs.size() < 2) throw InsufficientPoints("find_plateau: need samples");
    Plateau<T> best{T(0), T(-1), T(0), T(0)};
    std::size_t j = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (j < xs.size() && xs[j] - xs[i] <= width) ++j;
        if (j - i < 2 || xs[j - 1] - xs[i] < width * T(0.999)) continue;
        T lo = ys[i], hi = ys[i], sum(0);
        bool finite = true;
        for (std::size_t k = i; k < j && finite; ++k) {
            finite = is_finite(ys[k]);
            lo = ys[k] < lo ? ys[k] : lo;
            hi = ys[k] > hi ? ys[k] : hi;
            sum += ys[k];
        }
        if (!finite) continue;
        T spread = hi - lo;
        if (best.spread < 0 || spread < best.spread)
            best = {T(sum / static_cast<int>(j - i)), spread, xs[i], xs[j - 1]};
    }
    if (best.spread < 0) throw InsufficientPoints("find_plateau: window wider than sample");
    return best;
}

}  // namespace asymp
