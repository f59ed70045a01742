#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/scalar.hpp"
#include "asymp/problems/flierl_petviashvili.hpp"
#include "asymp/reference/boundary_layer_shoot.hpp"
#include "asymp/reference/profile.hpp"

namespace asymp {

/// Flierl-Petviashvili problem mapped to alpha = 1 - e^{-r} on [0, 1 - eps]:
///   (1-a)^2 u'' - [(1-a) + (1-a)/ln(1-a)] u' - u - u^2 = 0,
/// marched with uniform-step RK4 from a series launch at alpha = step.
template <typename T>
class FpMarch {
public:
    FpMarch(const T& eps, int steps) : eps_(eps), steps_(steps) {
        using std::log1p;
        if (!(eps > 0 && eps <= T(0.1L))) throw InvalidArgument("fp_shoot: eps must lie in (0, 0.1]");
        if (steps < 4) throw InvalidArgument("fp_shoot: too few steps");
        h_ = (1 - eps) / steps;
        // P and Q at alpha = k h / 2 with u'' = P u' + Q (u + u^2)
        P_.resize(2 * steps + 1);
        Q_.resize(2 * steps + 1);
        for (int k = 2; k <= 2 * steps; ++k) {
            T a = h_ * k / 2;
            T om = 1 - a;
            T lg = log1p(-a);
            P_[k] = (1 + 1 / lg) / om;
            Q_[k] = 1 / (om * om);
        }
    }

    const T& step() const { return h_; }
    int steps() const { return steps_; }

    /// u(1 - eps) for the launch value z; nullopt-free, but clipped to +-limit
    /// once the solution has left the bounded regime.
    T terminal(const T& z, bool* clipped = nullptr, NumericProfile<T>* profile = nullptr, const T& r_max = T(0)) const {
        using std::abs;
        using std::log1p;
        T u, v;
        launch(z, u, v);
        if (clipped) *clipped = false;
        if (profile) record(*profile, z, u, v, 2, r_max);
        const T limit(50);
        for (int i = 1; i < steps_; ++i) {
            const int k = 2 * i;
            T k1u = v, k1v = rhs(k, u, v);
            T u2 = u + h_ / 2 * k1u, v2 = v + h_ / 2 * k1v;
            T k2u = v2, k2v = rhs(k + 1, u2, v2);
            T u3 = u + h_ / 2 * k2u, v3 = v + h_ / 2 * k2v;
            T k3u = v3, k3v = rhs(k + 1, u3, v3);
            T u4 = u + h_ * k3u, v4 = v + h_ * k3v;
            T k4u = v4, k4v = rhs(k + 2, u4, v4);
            u += h_ / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
            v += h_ / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
            if (!is_finite(u) || abs(u) > limit) {
                if (clipped) *clipped = true;
                return (u > 0 || (!is_finite(u) && k4u > 0)) ? limit : T(-limit);
            }
            if (profile) {
                if (!record(*profile, z, u, v, k + 2, r_max)) profile = nullptr;
            }
        }
        return u;
    }

private:
    T rhs(int k, const T& u, const T& v) const { return P_[k] * v + Q_[k] * (u + u * u); }

    void launch(const T& z, T& u, T& v) const {
        using std::log1p;
        auto a = fp_series(FpParams<T>{z}, 12).coeffs;
        T r = -log1p(-h_);
        u = T(0);
        T du(0);
        for (int n = 12; n >= 0; --n) u = u * r + a[n];
        for (int n = 12; n >= 1; --n) du = du * r + a[n] * n;
        v = du / (1 - h_);
    }

    /// Appends the sample at node k (alpha = k h / 2) in the r variable.
    bool record(NumericProfile<T>& p, const T&, const T& u, const T& v, int k, const T& r_max) const {
        using std::log1p;
        T a = h_ * k / 2;
        T om = 1 - a;
        T r = -log1p(-a);
        if (r_max > 0 && r > r_max) return false;
        T uaa = rhs(k, u, v);
        p.push(r, u, T(om * v), T(om * om * uaa - om * v));
        return true;
    }

    T eps_, h_;
    int steps_;
    std::vector<T> P_, Q_;
};

/// Shooting on z = u(0) for u(1 - eps) = 0. The reported terminal mismatch is
/// |u(1 - eps)| divided by the secant slope, i.e. in units of z.
template <typename T = long double>
ShootResult<T> fp_shoot(const T& eps, const T& step, const T& tol, const T& guess = T(-2.4), int max_iter = 200) {
    using std::abs;
    using std::llround;
    const T span = 1 - eps;
    const long long m = llround(to_double(span / step));
    if (m < 4 || abs(T(m) * step - span) > T(1e-9) * span)
        throw InvalidArgument("fp_shoot: step must divide 1 - eps evenly");
    FpMarch<T> march(eps, static_cast<int>(m));

    int evals = 0;
    auto g = [&](const T& z, bool& clipped) {
        ++evals;
        return march.terminal(z, &clipped);
    };

    // bracket [a, b] with opposite terminal signs: below the root the solution
    // overshoots zero and blows up, above it it relaxes towards u = -1
    auto opposite = [](const T& x, const T& y) { return (x < 0 && y > 0) || (x > 0 && y < 0); };
    T a(0), b(0), ga(0), gb(0);
    bool ca = false, cb = false, bracketed = false;
    for (T d : {T(1e-7), T(1e-5), T(1e-3), T(2e-2), T(0.1)}) {
        a = guess - d;
        b = guess + d;
        ga = g(a, ca);
        gb = g(b, cb);
        if ((bracketed = opposite(ga, gb))) break;
    }
    if (!bracketed) {
        std::vector<std::pair<T, T>> samples;
        for (int k = 0; k <= 100; ++k) {
            bool c;
            T z = T(-6) + T(0.05) * k;
            samples.emplace_back(z, g(z, c));
        }
        std::optional<T> best;
        for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
            if (!opposite(samples[i].second, samples[i + 1].second)) continue;
            T dist = abs(samples[i].first - guess);
            if (!best || dist < *best) {
                best = dist;
                a = samples[i].first;
                b = samples[i + 1].first;
            }
        }
        if (!best) throw NonConvergence("fp_shoot: no sign change of the terminal value");
        ga = g(a, ca);
        gb = g(b, cb);
    }

    // secant on the two latest iterates, falling back to bisection whenever
    // the candidate leaves the bracket or a value was clipped
    T z0 = a, g0 = ga, z1 = b, g1 = gb;
    bool c0 = ca, c1 = cb;
    int it = 0;
    T z = z1, gz = g1, slope(0);
    for (; it < max_iter; ++it) {
        T lo = a < b ? a : b, hi = a < b ? b : a;
        T cand;
        bool use_secant = !c0 && !c1 && g1 != g0;
        if (use_secant) cand = z1 - g1 * (z1 - z0) / (g1 - g0);
        if (!use_secant || !(cand > lo && cand < hi)) cand = (a + b) / 2;
        bool cc;
        T gc = g(cand, cc);
        if (!cc && !c1 && cand != z1) slope = (gc - g1) / (cand - z1);
        if (opposite(gc, ga)) { b = cand; gb = gc; cb = cc; }
        else { a = cand; ga = gc; ca = cc; }
        T dz = abs(cand - z1);
        z0 = z1; g0 = g1; c0 = c1;
        z1 = cand; g1 = gc; c1 = cc;
        z = cand;
        gz = gc;
        if (gc == 0 || (dz <= tol * (1 + abs(z)) && !cc) || abs(b - a) <= tol * (1 + abs(z))) break;
    }
    if (it == max_iter) throw NonConvergence("fp_shoot: no convergence");
    if (abs(z) < T(0.1)) throw ConvergedToTrivial("fp_shoot: converged to the trivial solution");
    T mismatch = slope != 0 ? T(abs(gz / slope)) : T(abs(gz));
    return {z, evals, mismatch};
}

template <typename T>
struct RefinedShoot {
    ShootResult<T> result;
    int steps = 0;
    T change{0};
};

/// Doubles the number of steps until z changes by at most tol.
template <typename T = long double>
RefinedShoot<T> fp_shoot_refined(const T& eps, const T& tol, int initial_steps = 1 << 14, int max_steps = 1 << 23) {
    using std::abs;
    std::optional<ShootResult<T>> prev;
    T guess(-2.4);
    for (int m = initial_steps; m <= max_steps; m *= 2) {
        auto r = fp_shoot<T>(eps, T((1 - eps) / m), T(tol / 100), guess);
        if (prev && abs(r.parameter - prev->parameter) <= tol) return {r, m, T(abs(r.parameter - prev->parameter))};
        guess = r.parameter;
        prev = r;
    }
    throw NonConvergence("fp_shoot_refined: step refinement did not converge");
}

/// Profile in r of the shot solution, sampled every `stride` steps up to r_max.
template <typename T = long double>
NumericProfile<T> fp_profile(const T& z, const T& eps, int steps, const T& r_max, int stride = 1) {
    FpMarch<T> march(eps, steps);
    NumericProfile<T> full;
    march.terminal(z, nullptr, &full, r_max);
    NumericProfile<T> p;
    p.meta = {"rk4-shooting-alpha", march.step(), eps};
    p.push(T(0), z, T(0), T(2 * fp_series(FpParams<T>{z}, 2).coeffs[2]));
    for (std::size_t i = 0; i < full.size(); i += stride) p.push(full.xs[i], full.f[i], full.f1[i], full.f2[i]);
    return p;
}

}  // namespace asymp
