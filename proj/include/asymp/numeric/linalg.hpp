#pragma once

#include <cmath>
#include <vector>

#include "asymp/numeric/errors.hpp"

namespace asymp {

/// Solves sum_k x_k^n w_k = b_n for n = 0..N-1 (rows are powers of the nodes)
/// with the Bjorck-Pereyra algorithm, O(N^2).
template <typename T, typename S = T>
std::vector<S> vandermonde_solve(const std::vector<T>& x, std::vector<S> b) {
    const int n = static_cast<int>(x.size());
    if (n == 0 || static_cast<int>(b.size()) != n) throw InvalidArgument("vandermonde_solve: size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x[i] == x[j]) throw DegenerateNodes("vandermonde_solve: repeated node");

    const int m = n - 1;
    for (int k = 0; k < m; ++k)
        for (int i = m; i > k; --i) b[i] -= b[i - 1] * x[k];
    for (int k = m - 1; k >= 0; --k) {
        for (int i = k + 1; i <= m; ++i) b[i] /= T(x[i] - x[i - k - 1]);
        for (int i = k; i < m; ++i) b[i] -= b[i + 1];
    }
    return b;
}

/// Product of the power-row matrix with w; the forward map of vandermonde_solve.
template <typename T>
std::vector<T> vandermonde_multiply(const std::vector<T>& x, const std::vector<T>& w) {
    const std::size_t n = x.size();
    std::vector<T> out(n, T(0));
    for (std::size_t k = 0; k < n; ++k) {
        T p(1);
        for (std::size_t r = 0; r < n; ++r) {
            out[r] += p * w[k];
            p *= x[k];
        }
    }
    return out;
}

}  // namespace asymp
