#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/jet.hpp"
#include "asymp/numeric/linalg.hpp"
#include "asymp/numeric/scalar.hpp"
#include "asymp/problems/boundary_layer.hpp"
#include "asymp/problems/flierl_petviashvili.hpp"
#include "asymp/problems/virial.hpp"
#include "asymp/series/truncated_series.hpp"

namespace asymp {

// ---------------------------------------------------------------- soft sphere

/// Z_A = (sum_{n<N} A_n x^n)^{(h/3)/(N-1)}.
template <typename T>
struct PowerLawApproximant {
    T h;
    int N = 0;
    std::vector<T> A;

    T exponent() const { return h / 3 / (N - 1); }
};

template <typename T>
PowerLawApproximant<T> build_soft_sphere(const VirialInput<T>& v, int N) {
    if (!v.h || !(*v.h > 0)) throw InvalidArgument("build_soft_sphere: h must be positive");
    if (N < 2) throw InvalidArgument("build_soft_sphere: N must be at least 2");
    if (static_cast<int>(v.coeffs.size()) < N)
        throw MissingCoefficients("build_soft_sphere: need " + std::to_string(N) + " virial coefficients");
    TruncatedSeries<T> z(std::vector<T>(v.coeffs.begin(), v.coeffs.begin() + N));
    T s = T(N - 1) / (*v.h / 3);
    return {*v.h, N, pow_real(z, s).coeffs};
}

// ---------------------------------------------------------- critical isotherm

/// P_A = P_c - sum_{n<=N} A_n rho^n (1 - rho/rho_c)^delta.
template <typename T>
struct CriticalIsothermApproximant {
    T Pc, rho_c, delta, kTc;
    int N = 0;
    std::vector<T> A;
};

namespace detail {
/// g_n / n! = Gamma(delta+n) / (Gamma(delta) n!) for n = 0..N as running products.
template <typename T>
std::vector<T> rising_over_factorial(const T& delta, int N) {
    std::vector<T> r(N + 1);
    r[0] = 1;
    for (int n = 1; n <= N; ++n) r[n] = r[n - 1] * (delta + (n - 1)) / n;
    return r;
}

template <typename T>
void require_critical(const VirialInput<T>& v, bool need_rho_c) {
    if (!v.Pc || !v.kTc || !v.delta || (need_rho_c && !v.rho_c))
        throw MissingCriticalConstants("critical constants Pc, kTc, delta" +
                                       std::string(need_rho_c ? ", rho_c" : "") + " are required");
}
}  // namespace detail

template <typename T>
CriticalIsothermApproximant<T> build_critical_isotherm(const VirialInput<T>& v, int N) {
    detail::require_critical(v, true);
    if (N < 1) throw InvalidArgument("build_critical_isotherm: N must be at least 1");
    if (static_cast<int>(v.coeffs.size()) < N)
        throw MissingCoefficients("build_critical_isotherm: need B_1..B_" + std::to_string(N));
    const T &Pc = *v.Pc, &rc = *v.rho_c, &kT = *v.kTc;
    auto w = detail::rising_over_factorial(*v.delta, N);
    std::vector<T> inv_rc_pow(N + 1);
    inv_rc_pow[0] = 1;
    for (int n = 1; n <= N; ++n) inv_rc_pow[n] = inv_rc_pow[n - 1] / rc;

    std::vector<T> A(N + 1);
    A[0] = Pc;
    for (int n = 1; n <= N; ++n) {
        T s(0);
        for (int j = 1; j <= n; ++j) s += v.coeffs[j - 1] * w[n - j] * inv_rc_pow[n - j];
        A[n] = Pc * w[n] * inv_rc_pow[n] - kT * s;
    }
    return {Pc, rc, *v.delta, kT, N, std::move(A)};
}

// --------------------------------------------------------- offset reciprocal

/// f_A = C - C / (1 + sum A_n eta^n) for Sakiadis; the Blasius form adds eta
/// and uses B as the constant.
template <typename T>
struct OffsetReciprocalApproximant {
    BoundaryLayer problem = BoundaryLayer::Sakiadis;
    T constant, kappa;
    int N = 0;
    std::vector<T> A;

    bool linear_term() const { return problem == BoundaryLayer::Blasius; }
};

/// A_0 = 1, A_n = (1/c) sum_{j=1..n} at_j A_{n-j}.
template <typename S>
std::vector<S> offset_reciprocal_coeffs(const std::vector<S>& at, const S& c, int N) {
    std::vector<S> A(N + 1, S(0));
    A[0] = S(1);
    S inv = S(1) / c;
    for (int n = 1; n <= N; ++n) {
        S s(0);
        for (int j = 1; j <= n; ++j) s += at[j] * A[n - j];
        A[n] = s * inv;
    }
    return A;
}

/// Series coefficients with the Blasius linear term removed.
template <typename S>
std::vector<S> offset_series(BoundaryLayer problem, const S& kappa, int N) {
    auto a = series_for(problem, kappa, std::max(N, 5)).coeffs;
    a.resize(N + 1);
    if (problem == BoundaryLayer::Blasius) a[1] = a[1] - S(1);
    return a;
}

template <typename T>
OffsetReciprocalApproximant<T> build_offset_reciprocal(BoundaryLayer problem, const T& kappa, const T& c, int N) {
    if (c == 0) throw ZeroAsymptoticConstant("build_offset_reciprocal: constant must be nonzero");
    if (N < 1) throw InvalidArgument("build_offset_reciprocal: N must be at least 1");
    auto at = offset_series(problem, kappa, N);
    return {problem, c, kappa, N, offset_reciprocal_coeffs(at, c, N)};
}

// ---------------------------------------------------------------- exp series

/// f_A = C + sum_{n=1..N} A_n exp(-n C eta / 2); A[0] holds A_1.
template <typename T>
struct ExpSeriesApproximant {
    T C, kappa;
    int N = 0;
    std::vector<T> A;

    const T& G() const { return A.front(); }
};

/// Right-hand side n! (-2/C)^n a_n, with a_0 - C in row 0.
template <typename S>
std::vector<S> exp_series_rhs(const std::vector<S>& a, const S& C, int N) {
    std::vector<S> r(N);
    r[0] = a[0] - C;
    S f = S(1);
    S m2c = S(-2) / C;
    for (int n = 1; n < N; ++n) {
        f = f * m2c * n;
        r[n] = f * a[n];
    }
    return r;
}

template <typename T>
const std::vector<T>& exp_nodes(int N) {
    thread_local std::vector<std::vector<T>> cache;
    thread_local unsigned prec = 0;
    if constexpr (is_mp_v<T>) {
        if (prec != T::default_precision()) {
            cache.clear();
            prec = T::default_precision();
        }
    }
    if (static_cast<int>(cache.size()) <= N) cache.resize(N + 1);
    auto& x = cache[N];
    if (static_cast<int>(x.size()) != N) {
        x.clear();
        for (int k = 1; k <= N; ++k) x.push_back(T(k));
    }
    return x;
}

template <typename T, typename S = T>
std::vector<S> exp_series_coeffs(const std::vector<S>& a, const S& C, int N) {
    return vandermonde_solve<T, S>(exp_nodes<T>(N), exp_series_rhs(a, C, N));
}

template <typename T>
ExpSeriesApproximant<T> build_exp_series(const T& kappa, const T& C, int N) {
    if (!(C > 0)) throw InvalidArgument("build_exp_series: C must be positive");
    if (N < 1) throw InvalidArgument("build_exp_series: N must be at least 1");
    auto a = sakiadis_series(kappa, std::max(N, 3)).coeffs;
    return {C, kappa, N, exp_series_coeffs<T>(a, C, N)};
}

// ------------------------------------------------------------ pade reciprocal

/// u_A = z / (1 + sum A_n r^n).
template <typename T>
struct PadeReciprocalApproximant {
    T z;
    int N = 0;
    std::vector<T> A;
};

/// A_0 = 1, A_n = -(1/z) sum_{j=1..n} a_j A_{n-j}.
template <typename S>
std::vector<S> fp_coeffs(const std::vector<S>& a, int N) {
    std::vector<S> A(N + 1, S(0));
    A[0] = S(1);
    S inv = S(1) / a[0];
    for (int n = 2; n <= N; n += 2) {
        S s(0);
        for (int j = 2; j <= n; j += 2) s += a[j] * A[n - j];
        A[n] = -(s * inv);
    }
    return A;
}

template <typename T>
PadeReciprocalApproximant<T> build_fp(const T& z, int N) {
    if (z == 0) throw ZeroCenterValue("build_fp: z must be nonzero");
    if (N < 2 || N % 2) throw InvalidArgument("build_fp: N must be even and at least 2");
    auto a = fp_series(FpParams<T>{z}, N).coeffs;
    return {z, N, fp_coeffs(a, N)};
}

}  // namespace asymp
