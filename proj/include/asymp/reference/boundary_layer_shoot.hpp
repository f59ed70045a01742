#pragma once

#include <array>
#include <cmath>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/scalar.hpp"
#include "asymp/problems/boundary_layer.hpp"
#include "asymp/reference/profile.hpp"

namespace asymp {

template <typename T>
struct ShootResult {
    T parameter{0};
    int iterations = 0;
    T terminal_mismatch{0};
};

namespace detail {
template <typename T>
using State3 = std::array<T, 3>;

/// 2 f''' + f f'' = 0 as a first-order system.
template <typename T>
State3<T> blasius_rhs(const State3<T>& y) {
    return {y[1], y[2], T(-y[0] * y[2] / 2)};
}

template <typename T>
State3<T> rk4_step(const State3<T>& y, const T& h) {
    auto axpy = [](const State3<T>& a, const T& s, const State3<T>& b) {
        return State3<T>{T(a[0] + s * b[0]), T(a[1] + s * b[1]), T(a[2] + s * b[2])};
    };
    T h2 = h / 2;
    auto k1 = blasius_rhs(y);
    auto k2 = blasius_rhs(axpy(y, h2, k1));
    auto k3 = blasius_rhs(axpy(y, h2, k2));
    auto k4 = blasius_rhs(axpy(y, h, k3));
    State3<T> out;
    for (int i = 0; i < 3; ++i) out[i] = y[i] + h * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]) / 6;
    return out;
}

template <typename T>
State3<T> march_boundary_layer(BoundaryLayer problem, const T& kappa, const T& eta_inf, int steps,
                               NumericProfile<T>* profile) {
    State3<T> y{T(0), T(problem == BoundaryLayer::Sakiadis ? 1 : 0), kappa};
    T h = eta_inf / steps;
    if (profile) profile->push(T(0), y[0], y[1], y[2]);
    for (int i = 1; i <= steps; ++i) {
        y = rk4_step(y, h);
        if (!is_finite(y[0]) || !is_finite(y[1])) throw NonConvergence("boundary layer march overflowed");
        if (profile) profile->push(T(h * i), y[0], y[1], y[2]);
    }
    return y;
}
}  // namespace detail

/// Secant shooting on kappa for f'(eta_inf) = 0 (Sakiadis) or 1 (Blasius)
/// with fixed-step RK4.
template <typename T>
std::pair<ShootResult<T>, NumericProfile<T>> boundary_layer_shoot(BoundaryLayer problem, const T& eta_inf, const T& tol,
                                                                  const T& step = T(0.001), int max_iter = 50) {
    using std::abs;
    using std::ceil;
    if (eta_inf < 10 || eta_inf > 40) throw InvalidArgument("boundary_layer_shoot: eta_inf must lie in [10, 40]");
    const int steps = static_cast<int>(ceil(to_double(eta_inf / step) - 1e-9));
    const T target(problem == BoundaryLayer::Sakiadis ? 0 : 1);
    auto mismatch = [&](const T& k) -> T { return detail::march_boundary_layer<T>(problem, k, eta_inf, steps, nullptr)[1] - target; };

    T k0(problem == BoundaryLayer::Sakiadis ? -0.44 : 0.33);
    T k1 = k0 + T(problem == BoundaryLayer::Sakiadis ? -0.01 : 0.01);
    T g0 = mismatch(k0), g1 = mismatch(k1);
    int it = 0;
    for (; it < max_iter; ++it) {
        if (g1 == g0) break;
        T k2 = k1 - g1 * (k1 - k0) / (g1 - g0);
        k0 = k1;
        g0 = g1;
        k1 = k2;
        g1 = mismatch(k1);
        if (abs(k1 - k0) <= tol * (1 + abs(k1))) break;
    }
    if (it == max_iter) throw NonConvergence("boundary_layer_shoot: secant did not converge");

    NumericProfile<T> profile;
    profile.meta = {"rk4-shooting", T(eta_inf / steps), eta_inf};
    detail::march_boundary_layer<T>(problem, k1, eta_inf, steps, &profile);
    return {ShootResult<T>{k1, it + 2, T(abs(g1))}, std::move(profile)};
}

}  // namespace asymp
