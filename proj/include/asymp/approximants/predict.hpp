#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asymp/approximants/families.hpp"
#include "asymp/approximants/prediction.hpp"
#include "asymp/numeric/newton.hpp"
#include "asymp/numeric/polynomial.hpp"
#include "asymp/problems/flierl_petviashvili.hpp"
#include "asymp/problems/virial.hpp"

namespace asymp {

// ------------------------------------------------------------------ residuals

namespace detail {
/// A_n divided by the magnitude of the terms that cancel to produce it.
template <typename S>
S normalized_top(const std::vector<S>& at, const std::vector<S>& A, const S& c, int n) {
    using std::abs;
    S w(0);
    for (int j = 1; j <= n; ++j) w += abs(at[j] * A[n - j]);
    return A[n] * abs(c) / w;
}
}  // namespace detail

/// A_N = A_{N-1} = 0 for the offset-reciprocal form, in normalized units.
struct OffsetReciprocalResidual {
    BoundaryLayer problem;
    int N;

    template <typename S>
    std::array<S, 2> operator()(const S& kappa, const S& c) const {
        auto at = offset_series(problem, kappa, N);
        auto A = offset_reciprocal_coeffs(at, c, N);
        return {detail::normalized_top(at, A, c, N), detail::normalized_top(at, A, c, N - 1)};
    }
};

/// A_N = A_{N-1} = 0 for the exponential series.
struct ExpSeriesResidual {
    int N;

    template <typename S>
    std::array<S, 2> operator()(const S& kappa, const S& C) const {
        using B = std::remove_cvref_t<decltype(scalar_part(kappa))>;
        auto a = sakiadis_series(kappa, std::max(N, 3)).coeffs;
        auto A = exp_series_coeffs<B, S>(a, C, N);
        return {A[N - 1], A[N - 2]};
    }
};

// --------------------------------------------------------- two-parameter solve

struct Box {
    double lo0, hi0, lo1, hi1;
    int n0, n1;
};

template <typename T>
struct TwoParamSpec {
    std::string family;
    std::array<std::string, 2> names;
    std::function<bool(const T&, const T&)> physical;
    std::array<double, 2> seed;
    std::optional<Box> grid;
    bool grid_always = false;
    bool coarse_in_double = true;
};

template <typename T>
struct PredictOptions {
    PredictOptions() = default;
    PredictOptions(const Context& c) : ctx(c) {}

    Context ctx{};
    std::optional<std::array<T, 2>> guess;
    std::vector<int> canonical_orders;
};

namespace detail {

template <typename T>
bool same_root(const std::array<T, 2>& a, const std::array<T, 2>& b) {
    using std::abs;
    return abs(a[0] - b[0]) <= T(1e-8) * (1 + abs(a[0])) && abs(a[1] - b[1]) <= T(1e-8) * (1 + abs(a[1]));
}

template <typename T, typename F>
std::optional<NewtonResult<T>> try_newton(const F& f, const std::array<T, 2>& start, const T& tol, int max_iter) {
    try {
        return newton_2d<T>(f, start, tol, max_iter);
    } catch (const NonConvergence&) {
    } catch (const SingularJacobian&) {
    }
    return std::nullopt;
}

template <typename T>
void add_root(std::vector<NewtonResult<T>>& roots, const NewtonResult<T>& r) {
    for (const auto& q : roots)
        if (same_root<T>({q.x, q.y}, {r.x, r.y})) return;
    roots.push_back(r);
}

/// All distinct physical roots reachable from the given starts.
template <typename T, typename Residual>
std::vector<NewtonResult<T>> solve_from_starts(const Residual& f, const TwoParamSpec<T>& spec,
                                               const std::vector<std::array<T, 2>>& starts, bool coarse) {
    std::vector<NewtonResult<T>> roots;
    const T tol = precision_tol<T>(10);
    for (const auto& s : starts) {
        std::optional<NewtonResult<T>> r;
        if (coarse && spec.coarse_in_double) {
            auto rd = try_newton<double>(f, {to_double(s[0]), to_double(s[1])}, 1e-11, 60);
            if (!rd || !spec.physical(T(rd->x), T(rd->y))) continue;
            r = try_newton<T>(f, {T(rd->x), T(rd->y)}, tol, 40);
        } else {
            r = try_newton<T>(f, s, tol, 80);
        }
        if (r && spec.physical(r->x, r->y)) add_root(roots, *r);
    }
    return roots;
}

template <typename T>
std::vector<std::array<T, 2>> grid_starts(const Box& b) {
    std::vector<std::array<T, 2>> out;
    for (int i = 0; i < b.n0; ++i)
        for (int j = 0; j < b.n1; ++j)
            out.push_back({T(b.lo0 + (b.hi0 - b.lo0) * (i + 0.5) / b.n0), T(b.lo1 + (b.hi1 - b.lo1) * (j + 0.5) / b.n1)});
    return out;
}

}  // namespace detail

/// Roots of a two-parameter sacrifice system for each order, tracked across
/// orders. Continuation guesses come from the previous order's roots and their
/// linear extrapolation; a grid of starts is added when configured or when
/// continuation finds nothing.
template <typename T, typename MakeResidual>
ParameterPrediction<T> predict_two_param(const TwoParamSpec<T>& spec, const std::vector<int>& orders,
                                         MakeResidual make, const PredictOptions<T>& opt) {
    ScopedPrecision<T> guard(opt.ctx);
    ParameterPrediction<T> pred;
    pred.family = spec.family;
    pred.param_names = {spec.names[0], spec.names[1]};

    std::vector<std::vector<std::array<T, 2>>> history;
    for (int N : orders) {
        auto f = make(N);
        std::vector<std::array<T, 2>> starts;
        if (history.empty()) {
            starts.push_back(opt.guess ? *opt.guess : std::array<T, 2>{T(spec.seed[0]), T(spec.seed[1])});
        } else {
            for (const auto& p : history.back()) starts.push_back(p);
            if (history.size() >= 2) {
                for (const auto& p : history.back()) {
                    const std::array<T, 2>* q = nullptr;
                    T best(0);
                    for (const auto& c : history[history.size() - 2]) {
                        T d = detail::param_distance<T>({p[0], p[1]}, {c[0], c[1]});
                        if (!q || d < best) { q = &c; best = d; }
                    }
                    if (q) starts.push_back({T(2 * p[0] - (*q)[0]), T(2 * p[1] - (*q)[1])});
                }
            }
        }
        auto roots = detail::solve_from_starts<T>(f, spec, starts, false);
        if (spec.grid && (spec.grid_always || roots.empty())) {
            auto more = detail::solve_from_starts<T>(f, spec, detail::grid_starts<T>(*spec.grid), true);
            for (const auto& r : more) detail::add_root(roots, r);
        }
        std::vector<std::array<T, 2>> found;
        bool canonical = opt.canonical_orders.empty() ||
                         std::find(opt.canonical_orders.begin(), opt.canonical_orders.end(), N) != opt.canonical_orders.end();
        for (const auto& r : roots) {
            pred.records.push_back({N, {r.x, r.y}, r.residual, -1, canonical});
            found.push_back({r.x, r.y});
        }
        history.push_back(std::move(found));
    }
    if (pred.records.empty()) throw NoPhysicalRoot(spec.family + ": no physical root at any order");
    assign_branches(pred);
    return pred;
}

inline std::vector<int> range_orders(int first, int last, int step) {
    std::vector<int> v;
    for (int n = first; n <= last; n += step) v.push_back(n);
    return v;
}

// --------------------------------------------------------------- Sakiadis

template <typename T>
TwoParamSpec<T> sakiadis_simple_spec() {
    TwoParamSpec<T> s;
    s.family = "sakiadis-simple";
    s.names = {"kappa", "C"};
    s.physical = [](const T& k, const T& c) { return k < 0 && c > 0; };
    s.seed = {-0.5, 2.0};
    s.grid = Box{-1.0, 0.0, 1.0, 3.0, 11, 9};
    s.grid_always = true;
    return s;
}

template <typename T>
ParameterPrediction<T> predict_sakiadis_simple(const std::vector<int>& orders, const PredictOptions<T>& opt = {}) {
    auto o = opt;
    if (o.canonical_orders.empty())
        for (int n : orders) if (n % 2) o.canonical_orders.push_back(n);
    return predict_two_param<T>(sakiadis_simple_spec<T>(), orders,
                                [](int N) { return OffsetReciprocalResidual{BoundaryLayer::Sakiadis, N}; }, o);
}

/// Single-order solve of the simple Sakiadis system from a guess.
template <typename T>
NewtonResult<T> solve_sakiadis_simple(int N, std::array<T, 2> guess, const Context& ctx = {}) {
    ScopedPrecision<T> guard(ctx);
    auto r = newton_2d<T>(OffsetReciprocalResidual{BoundaryLayer::Sakiadis, N}, {T(guess[0]), T(guess[1])},
                          precision_tol<T>(10), 80);
    if (!(r.x < 0 && r.y > 0)) throw NoPhysicalRoot("sakiadis-simple: root violates kappa < 0, C > 0");
    return r;
}

inline std::vector<int> sakiadis_exp_table_orders() {
    return {5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 26, 27, 28, 29, 30};
}

template <typename T>
TwoParamSpec<T> sakiadis_exp_spec() {
    TwoParamSpec<T> s;
    s.family = "sakiadis-exp";
    s.names = {"kappa", "C"};
    s.physical = [](const T& k, const T& c) { return k < 0 && c > 0; };
    s.seed = {-0.5, 2.0};
    s.grid = Box{-1.0, 0.0, 1.0, 3.0, 6, 5};
    s.coarse_in_double = false;
    return s;
}

template <typename T>
ParameterPrediction<T> predict_sakiadis_exp(const std::vector<int>& orders, const PredictOptions<T>& opt = {}) {
    auto o = opt;
    if (o.canonical_orders.empty()) o.canonical_orders = sakiadis_exp_table_orders();
    auto pred = predict_two_param<T>(sakiadis_exp_spec<T>(), orders, [](int N) { return ExpSeriesResidual{N}; }, o);
    pred.param_names.push_back("G");
    ScopedPrecision<T> guard(o.ctx);
    for (auto& r : pred.records) r.params.push_back(build_exp_series(r.params[0], r.params[1], r.N).G());
    if (!pred.converged_values.empty()) {
        auto sel = pred.at(pred.optimal_truncation_N);
        if (sel) pred.converged_values = sel->params;
    }
    return pred;
}

template <typename T>
NewtonResult<T> solve_sakiadis_exp(int N, std::array<T, 2> guess, const Context& ctx = {}) {
    ScopedPrecision<T> guard(ctx);
    return newton_2d<T>(ExpSeriesResidual{N}, {T(guess[0]), T(guess[1])}, precision_tol<T>(10), 80);
}

// ---------------------------------------------------------------- Blasius

template <typename T>
TwoParamSpec<T> blasius_spec() {
    TwoParamSpec<T> s;
    s.family = "blasius";
    s.names = {"kappa", "B"};
    s.physical = [](const T& k, const T& b) { return k > 0 && b < 0; };
    s.seed = {0.3, -1.7};
    s.grid = Box{0.05, 0.6, -8.0, -1.0, 12, 15};
    s.grid_always = true;
    return s;
}

template <typename T>
ParameterPrediction<T> predict_blasius(const std::vector<int>& orders, const PredictOptions<T>& opt = {}) {
    auto o = opt;
    if (o.canonical_orders.empty())
        for (int n : orders) if (n % 5 == 0) o.canonical_orders.push_back(n);
    return predict_two_param<T>(blasius_spec<T>(), orders,
                                [](int N) { return OffsetReciprocalResidual{BoundaryLayer::Blasius, N}; }, o);
}

template <typename T>
NewtonResult<T> solve_blasius(int N, std::array<T, 2> guess, const Context& ctx = {}) {
    ScopedPrecision<T> guard(ctx);
    auto r = newton_2d<T>(OffsetReciprocalResidual{BoundaryLayer::Blasius, N}, {T(guess[0]), T(guess[1])},
                          precision_tol<T>(10), 80);
    if (!(r.x > 0 && r.y < 0)) throw NoPhysicalRoot("blasius: root violates kappa > 0, B < 0");
    return r;
}

/// Approximant at a predicted root with the sacrificed coefficients exactly zero.
template <typename T>
OffsetReciprocalApproximant<T> sacrificed_offset_reciprocal(BoundaryLayer problem, const T& kappa, const T& c, int N) {
    auto a = build_offset_reciprocal(problem, kappa, c, N);
    a.A[N] = 0;
    a.A[N - 1] = 0;
    return a;
}

template <typename T>
ExpSeriesApproximant<T> sacrificed_exp_series(const T& kappa, const T& C, int N) {
    auto a = build_exp_series(kappa, C, N);
    a.A[N - 1] = 0;
    a.A[N - 2] = 0;
    return a;
}

// ------------------------------------------------------------------- FP

/// A_N of the FP approximant as a polynomial in z.
template <typename T>
UnivariatePolynomial<T> fp_z_polynomial(int N) {
    if (N < 2 || N % 2) throw InvalidArgument("fp_z_polynomial: N must be even and at least 2");
    using P = UnivariatePolynomial<T>;
    auto a = fp_series_symbolic<T>(N);
    // a_{2i} / z, exact because every a_n with n >= 2 vanishes at z = 0
    std::vector<P> b(N / 2 + 1);
    for (int i = 1; i <= N / 2; ++i) b[i] = a[2 * i].deflate_zero_roots();
    std::vector<P> A(N / 2 + 1);
    A[0] = P(std::vector<T>{T(1)});
    for (int m = 1; m <= N / 2; ++m) {
        P s;
        for (int i = 1; i <= m; ++i) s = s + b[i] * A[m - i];
        A[m] = -s;
    }
    return A[N / 2];
}

namespace detail {
template <typename T>
std::vector<T> real_roots(const UnivariatePolynomial<T>& p) {
    using std::abs;
    std::vector<T> out;
    if (p.degree() < 1) return out;
    const T imag_tol = pow(T(10), T(-digits_of<T>() / 3));
    for (const auto& r : poly_roots(p, precision_tol<T>(10)))
        if (abs(r.im) <= imag_tol * (1 + abs(r.re))) out.push_back(r.re);
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace detail

inline constexpr double fp_trivial_margin = 0.05;

template <typename T>
ParameterPrediction<T> predict_fp_z(const std::vector<int>& orders, const Context& ctx = {}) {
    using std::abs;
    ScopedPrecision<T> guard(ctx);
    ParameterPrediction<T> pred;
    pred.family = "flierl-petviashvili";
    pred.param_names = {"z"};
    for (int N : orders) {
        if (N < 4 || N % 2) throw InvalidArgument("predict_fp_z: N must be even and at least 4");
        auto p = fp_z_polynomial<T>(N);
        for (const T& z : detail::real_roots(p)) {
            // roots accumulating on the constant solution u = -1 or on u = 0 are not decaying solutions
            if (!(z < 0) || abs(z) < T(0.1) || abs(z + 1) < T(fp_trivial_margin)) continue;
            pred.records.push_back({N, {z}, T(abs(p(z))), -1, true});
        }
    }
    if (pred.records.empty()) throw NoPhysicalRoot("flierl-petviashvili: no negative nontrivial root");
    assign_branches(pred);
    return pred;
}

template <typename T>
PadeReciprocalApproximant<T> sacrificed_fp(const T& z, int N) {
    auto a = build_fp(z, N);
    a.A[N] = 0;
    return a;
}

// ---------------------------------------------------------------- virial

/// A_N = 0 of the critical isotherm as a polynomial in rho_c.
template <typename T>
UnivariatePolynomial<T> rho_c_polynomial(const VirialInput<T>& v, int N) {
    detail::require_critical(v, false);
    if (N < 1) throw InvalidArgument("rho_c_polynomial: N must be at least 1");
    if (static_cast<int>(v.coeffs.size()) < N)
        throw MissingCoefficients("rho_c_polynomial: need B_1..B_" + std::to_string(N));
    auto w = detail::rising_over_factorial(*v.delta, N);
    std::vector<T> c(N + 1);
    c[0] = *v.Pc;
    for (int j = 1; j <= N; ++j) c[j] = -(*v.kTc) * v.coeffs[j - 1] * w[N - j] / w[N];
    return UnivariatePolynomial<T>(std::move(c));
}

template <typename T>
ParameterPrediction<T> predict_rho_c(const VirialInput<T>& v, const std::vector<int>& orders, const Context& ctx = {}) {
    using std::abs;
    ScopedPrecision<T> guard(ctx);
    ParameterPrediction<T> pred;
    pred.family = "critical-density";
    pred.param_names = {"rho_c"};
    for (int N : orders) {
        auto p = rho_c_polynomial(v, N);
        for (const T& r : detail::real_roots(p))
            if (r > 0) pred.records.push_back({N, {r}, T(abs(p(r))), -1, true});
    }
    if (pred.records.empty()) throw NoPhysicalRoot("critical-density: no positive real root");
    assign_branches(pred);
    return pred;
}

}  // namespace asymp
