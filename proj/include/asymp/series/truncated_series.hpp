#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/jet.hpp"

namespace asymp {

template <typename T>
const T& scalar_part(const T& x) { return x; }
template <typename T>
const T& scalar_part(const Jet2<T>& x) { return x.v; }

/// Coefficients a_0..a_N of an expansion about x0. Skipped terms are stored as
/// explicit zeros.
template <typename S>
struct TruncatedSeries {
    S x0{0};
    std::vector<S> coeffs;

    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<S> c, S at = S(0)) : x0(std::move(at)), coeffs(std::move(c)) {
        if (coeffs.empty()) throw InvalidArgument("TruncatedSeries: no coefficients");
    }

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    const S& operator[](int n) const { return coeffs[n]; }
    S& operator[](int n) { return coeffs[n]; }

    TruncatedSeries truncated(int order) const {
        std::vector<S> c(coeffs.begin(), coeffs.begin() + std::min(order, this->order()) + 1);
        return TruncatedSeries(std::move(c), x0);
    }
};

namespace detail {
template <typename S>
void require_same_point(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    if (!(scalar_part(a.x0) == scalar_part(b.x0)))
        throw MismatchedExpansionPoint("series expanded about different points");
}
}  // namespace detail

template <typename S>
TruncatedSeries<S> cauchy_product(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
    detail::require_same_point(a, b);
    const int N = std::min(a.order(), b.order());
    std::vector<S> c(N + 1, S(0));
    for (int n = 0; n <= N; ++n)
        for (int j = 0; j <= n; ++j) c[n] += a[j] * b[n - j];
    return TruncatedSeries<S>(std::move(c), a.x0);
}

template <typename S>
TruncatedSeries<S> reciprocal(const TruncatedSeries<S>& a) {
    if (scalar_part(a[0]) == 0) throw ZeroLeadingCoefficient("reciprocal: a0 = 0");
    const int N = a.order();
    std::vector<S> A(N + 1, S(0));
    S inv = S(1) / a[0];
    A[0] = inv;
    for (int n = 1; n <= N; ++n) {
        S s(0);
        for (int j = 1; j <= n; ++j) s += a[j] * A[n - j];
        A[n] = -(inv * s);
    }
    return TruncatedSeries<S>(std::move(A), a.x0);
}

/// a^s by Miller's recurrence.
template <typename S, typename E>
TruncatedSeries<S> pow_real(const TruncatedSeries<S>& a, const E& s) {
    using std::pow;
    if (!(scalar_part(a[0]) > 0)) throw NonpositiveLeadingCoefficient("pow_real: a0 must be positive");
    const int N = a.order();
    std::vector<S> A(N + 1, S(0));
    A[0] = pow(a[0], s);
    for (int n = 1; n <= N; ++n) {
        S acc(0);
        for (int j = 1; j <= n; ++j) acc += S(j * s - n + j) * a[j] * A[n - j];
        A[n] = acc / (n * a[0]);
    }
    return TruncatedSeries<S>(std::move(A), a.x0);
}

/// Value and first two derivatives of the partial sum at x.
template <typename T>
Jet2<T> evaluate(const TruncatedSeries<T>& a, const T& x) {
    Jet2<T> t = Jet2<T>::variable(T(x - a.x0));
    Jet2<T> r(a.coeffs.back());
    for (int n = a.order() - 1; n >= 0; --n) r = r * t + Jet2<T>(a[n]);
    return r;
}

}  // namespace asymp
