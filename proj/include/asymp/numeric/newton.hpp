#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/jet.hpp"
#include "asymp/numeric/scalar.hpp"

namespace asymp {

template <typename T>
struct NewtonResult {
    T x, y;
    int iterations = 0;
    T residual;
};

template <typename T>
T inf_norm(const std::array<T, 2>& r) {
    using std::abs;
    T a = abs(r[0]), b = abs(r[1]);
    return a > b ? a : b;
}

/// Jacobian of a two-equation residual at (x, y). Uses Jet2 propagation when
/// the residual accepts Jet2 arguments and central differences otherwise.
template <typename T, typename F>
std::array<std::array<T, 2>, 2> jacobian_2d(F& f, const T& x, const T& y) {
    std::array<std::array<T, 2>, 2> J;
    if constexpr (std::is_invocable_v<F&, const Jet2<T>&, const Jet2<T>&>) {
        auto rx = f(Jet2<T>::variable(x), Jet2<T>(y));
        auto ry = f(Jet2<T>(x), Jet2<T>::variable(y));
        J[0] = {rx[0].d1, ry[0].d1};
        J[1] = {rx[1].d1, ry[1].d1};
    } else {
        using std::abs;
        using std::pow;
        const T h = pow(T(10), T(-digits_of<T>() / 2));
        T hx = h * (abs(x) > 1 ? abs(x) : T(1));
        T hy = h * (abs(y) > 1 ? abs(y) : T(1));
        auto xp = f(T(x + hx), y), xm = f(T(x - hx), y);
        auto yp = f(x, T(y + hy)), ym = f(x, T(y - hy));
        for (int i = 0; i < 2; ++i) {
            J[i][0] = (xp[i] - xm[i]) / (2 * hx);
            J[i][1] = (yp[i] - ym[i]) / (2 * hy);
        }
    }
    return J;
}

/// Damped Newton iteration for two equations in two unknowns. The residual is
/// called as f(x, y) and returns std::array of two values.
template <typename T, typename F>
NewtonResult<T> newton_2d(F f, std::array<T, 2> guess, const T& tol, int max_iter = 60) {
    using std::abs;
    T x = guess[0], y = guess[1];
    std::array<T, 2> r = f(x, y);
    T norm = inf_norm(r);
    const T eps = precision_tol<T>(2);

    for (int it = 0; it <= max_iter; ++it) {
        if (!is_finite(norm)) throw NonConvergence("newton_2d: residual not finite");
        if (norm <= tol) return {x, y, it, norm};
        if (it == max_iter) break;

        auto J = jacobian_2d<T>(f, x, y);
        T det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        T scale = abs(J[0][0] * J[1][1]) + abs(J[0][1] * J[1][0]);
        if (!(abs(det) > eps * scale)) throw SingularJacobian("newton_2d: singular Jacobian");
        T dx = (J[1][1] * r[0] - J[0][1] * r[1]) / det;
        T dy = (J[0][0] * r[1] - J[1][0] * r[0]) / det;

        T lambda(1);
        T xn, yn, nn;
        std::array<T, 2> rn;
        for (int halvings = 0; halvings <= 20; ++halvings) {
            xn = x - lambda * dx;
            yn = y - lambda * dy;
            rn = f(xn, yn);
            nn = inf_norm(rn);
            if (is_finite(nn) && nn < norm) break;
            lambda /= 2;
        }
        if (!is_finite(nn)) throw NonConvergence("newton_2d: residual not finite");
        bool stalled = !(nn < norm);
        x = xn;
        y = yn;
        r = rn;
        norm = nn;
        if (stalled && abs(dx) <= eps * (abs(x) + 1) && abs(dy) <= eps * (abs(y) + 1)) break;
    }
    if (norm <= tol) return {x, y, max_iter, norm};
    throw NonConvergence("newton_2d: no convergence");
}

}  // namespace asymp
