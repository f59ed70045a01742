#pragma once

#include <vector>

#include "asymp/numeric/errors.hpp"
#include "asymp/series/truncated_series.hpp"

namespace asymp {

enum class BoundaryLayer { Sakiadis, Blasius };

/// Wall data of 2f''' + f f'' = 0: f(0) = a0, f'(0) = a1, f''(0) = kappa.
template <typename S>
struct BoundaryLayerParams {
    S kappa{0};
    S a0{0};
    S a1{0};

    static BoundaryLayerParams sakiadis(const S& kappa) { return {kappa, S(0), S(1)}; }
    static BoundaryLayerParams blasius(const S& kappa) { return {kappa, S(0), S(0)}; }
};

/// a_{n+3} = -sum_j (j+1)(j+2) a_{j+2} a_{n-j} / (2(n+1)(n+2)(n+3)).
template <typename S>
TruncatedSeries<S> boundary_layer_series(const BoundaryLayerParams<S>& p, int N) {
    if (N < 2) throw InvalidArgument("boundary_layer_series: N must be at least 2");
    std::vector<S> a(N + 1, S(0));
    a[0] = p.a0;
    a[1] = p.a1;
    a[2] = p.kappa / 2;
    for (int n = 0; n + 3 <= N; ++n) {
        S s(0);
        for (int j = 0; j <= n; ++j) {
            if (scalar_part(a[j + 2]) == 0 && scalar_part(a[n - j]) == 0) continue;
            s += ((j + 1) * (j + 2)) * (a[j + 2] * a[n - j]);
        }
        a[n + 3] = -s / (2 * (n + 1) * (n + 2) * (n + 3));
    }
    return TruncatedSeries<S>(std::move(a));
}

template <typename S>
TruncatedSeries<S> sakiadis_series(const S& kappa, int N) {
    if (N < 3) throw InvalidArgument("sakiadis_series: N must be at least 3");
    return boundary_layer_series(BoundaryLayerParams<S>::sakiadis(kappa), N);
}

template <typename S>
TruncatedSeries<S> blasius_series(const S& kappa, int N) {
    if (N < 5) throw InvalidArgument("blasius_series: N must be at least 5");
    return boundary_layer_series(BoundaryLayerParams<S>::blasius(kappa), N);
}

template <typename S>
TruncatedSeries<S> series_for(BoundaryLayer problem, const S& kappa, int N) {
    return problem == BoundaryLayer::Sakiadis ? boundary_layer_series(BoundaryLayerParams<S>::sakiadis(kappa), N)
                                              : boundary_layer_series(BoundaryLayerParams<S>::blasius(kappa), N);
}

}  // namespace asymp
