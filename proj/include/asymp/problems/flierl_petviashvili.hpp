#pragma once

#include <vector>

#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/polynomial.hpp"
#include "asymp/series/truncated_series.hpp"

namespace asymp {

template <typename S>
struct FpParams {
    S z{0};
};

/// u'' + u'/r - u - u^2 = 0 about r = 0 with u(0) = z:
/// a_{n+2} = (a_n + sum_k a_k a_{n-k}) / (n+2)^2.
template <typename S>
TruncatedSeries<S> fp_series(const FpParams<S>& p, int N) {
    if (N < 2) throw InvalidArgument("fp_series: N must be at least 2");
    std::vector<S> a(N + 1, S(0));
    a[0] = p.z;
    for (int n = 0; n + 2 <= N; n += 2) {
        S s = a[n];
        for (int k = 0; k <= n; k += 2) s += a[k] * a[n - k];
        a[n + 2] = s / ((n + 2) * (n + 2));
    }
    return TruncatedSeries<S>(std::move(a));
}

/// The same coefficients as exact polynomials in z.
template <typename T>
std::vector<UnivariatePolynomial<T>> fp_series_symbolic(int N) {
    if (N < 2) throw InvalidArgument("fp_series_symbolic: N must be at least 2");
    using P = UnivariatePolynomial<T>;
    std::vector<P> a(N + 1, P());
    a[0] = P::monomial(1);
    for (int n = 0; n + 2 <= N; n += 2) {
        P s = a[n];
        for (int k = 0; k <= n; k += 2) s = s + a[k] * a[n - k];
        a[n + 2] = s / T((n + 2) * (n + 2));
    }
    return a;
}

}  // namespace asymp
