#pragma once

#include <cmath>
#include <vector>

#include "asymp/numeric/errors.hpp"

namespace asymp {

template <typename T>
struct LinearFit {
    T slope, intercept, residual;
};

/// Least-squares line; residual is the RMS of the fit errors.
template <typename T>
LinearFit<T> linear_fit(const std::vector<T>& xs, const std::vector<T>& ys) {
    using std::sqrt;
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) throw InsufficientPoints("linear_fit: need at least two points");
    T mx(0), my(0);
    for (std::size_t i = 0; i < n; ++i) { mx += xs[i]; my += ys[i]; }
    mx /= static_cast<int>(n);
    my /= static_cast<int>(n);
    T sxx(0), sxy(0);
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) throw InsufficientPoints("linear_fit: abscissae coincide");
    T slope = sxy / sxx;
    T intercept = my - slope * mx;
    T ss(0);
    for (std::size_t i = 0; i < n; ++i) {
        T e = ys[i] - (intercept + slope * xs[i]);
        ss += e * e;
    }
    return {slope, intercept, T(sqrt(ss / static_cast<int>(n)))};
}

}  // namespace asymp
