#pragma once

#include <vector>

#include "asymp/approximants/families.hpp"
#include "asymp/series/truncated_series.hpp"

namespace asymp {

// Taylor coefficients of a built approximant about its expansion point, through
// the given order. Used to check that the approximant reproduces its source series.

template <typename T>
TruncatedSeries<T> taylor_expansion(const PowerLawApproximant<T>& a, int order) {
    std::vector<T> c(order + 1, T(0));
    for (int n = 0; n < static_cast<int>(a.A.size()) && n <= order; ++n) c[n] = a.A[n];
    return pow_real(TruncatedSeries<T>(std::move(c)), a.exponent());
}

template <typename T>
TruncatedSeries<T> taylor_expansion(const CriticalIsothermApproximant<T>& a, int order) {
    std::vector<T> base(order + 1, T(0)), poly(order + 1, T(0));
    base[0] = 1;
    if (order >= 1) base[1] = -1 / a.rho_c;
    for (int n = 0; n < static_cast<int>(a.A.size()) && n <= order; ++n) poly[n] = a.A[n];
    auto w = pow_real(TruncatedSeries<T>(std::move(base)), a.delta);
    auto p = cauchy_product(TruncatedSeries<T>(std::move(poly)), w);
    for (auto& c : p.coeffs) c = -c;
    p.coeffs[0] += a.Pc;
    return p;
}

template <typename T>
TruncatedSeries<T> taylor_expansion(const OffsetReciprocalApproximant<T>& a, int order) {
    std::vector<T> d(order + 1, T(0));
    for (int n = 0; n < static_cast<int>(a.A.size()) && n <= order; ++n) d[n] = a.A[n];
    auto r = reciprocal(TruncatedSeries<T>(std::move(d)));
    for (auto& c : r.coeffs) c = -(a.constant * c);
    r.coeffs[0] += a.constant;
    if (a.linear_term() && order >= 1) r.coeffs[1] += 1;
    return r;
}

template <typename T>
TruncatedSeries<T> taylor_expansion(const ExpSeriesApproximant<T>& a, int order) {
    std::vector<T> c(order + 1, T(0));
    c[0] = a.C;
    for (int n = 1; n <= a.N; ++n) {
        T rate = -(n * a.C) / 2, term = a.A[n - 1];
        for (int k = 0; k <= order; ++k) {
            c[k] += term;
            term = term * rate / (k + 1);
        }
    }
    return TruncatedSeries<T>(std::move(c));
}

template <typename T>
TruncatedSeries<T> taylor_expansion(const PadeReciprocalApproximant<T>& a, int order) {
    std::vector<T> d(order + 1, T(0));
    for (int n = 0; n < static_cast<int>(a.A.size()) && n <= order; ++n) d[n] = a.A[n];
    auto r = reciprocal(TruncatedSeries<T>(std::move(d)));
    for (auto& c : r.coeffs) c = a.z * c;
    return r;
}

/// max_n |a_n - b_n| / max(1, |b_n|) for n = first..last.
template <typename T>
T series_mismatch(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, int last, int first = 0) {
    using std::abs;
    T worst(0);
    for (int n = first; n <= last; ++n) {
        T scale = abs(b[n]) > 1 ? T(abs(b[n])) : T(1);
        T e = abs(a[n] - b[n]) / scale;
        if (e > worst) worst = e;
    }
    return worst;
}

}  // namespace asymp
