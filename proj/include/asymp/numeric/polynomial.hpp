#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "asymp/numeric/complex.hpp"
#include "asymp/numeric/errors.hpp"
#include "asymp/numeric/scalar.hpp"

namespace asymp {

/// Polynomial c0 + c1 x + ... stored lowest degree first.
template <typename T>
class UnivariatePolynomial {
public:
    UnivariatePolynomial() : c_{T(0)} {}
    explicit UnivariatePolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePolynomial monomial(int k, const T& c = T(1)) {
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return UnivariatePolynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](int k) const { return c_[k]; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

    template <typename X>
    X operator()(const X& x) const {
        X r = X(c_.back());
        for (int k = degree() - 1; k >= 0; --k) r = r * x + X(c_[k]);
        return r;
    }

    friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UnivariatePolynomial(std::move(r));
    }
    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x = -x;
        return UnivariatePolynomial(std::move(r));
    }
    friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        return a + (-b);
    }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UnivariatePolynomial(std::move(r));
    }
    friend UnivariatePolynomial operator*(const T& s, const UnivariatePolynomial& a) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x *= s;
        return UnivariatePolynomial(std::move(r));
    }

    friend UnivariatePolynomial operator/(const UnivariatePolynomial& a, const T& s) {
        std::vector<T> r = a.c_;
        for (auto& x : r) x /= s;
        return UnivariatePolynomial(std::move(r));
    }

    UnivariatePolynomial derivative() const {
        if (degree() == 0) return UnivariatePolynomial();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * static_cast<int>(k);
        return UnivariatePolynomial(std::move(r));
    }

    /// Divides out the factor x^k when the lowest k coefficients vanish.
    UnivariatePolynomial deflate_zero_roots(int* count = nullptr) const {
        std::size_t k = 0;
        while (k + 1 < c_.size() && c_[k] == 0) ++k;
        if (count) *count = static_cast<int>(k);
        return UnivariatePolynomial(std::vector<T>(c_.begin() + k, c_.end()));
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
        if (c_.empty()) c_.push_back(T(0));
    }
    std::vector<T> c_;
};

/// All roots of p by Aberth-Ehrlich simultaneous iteration.
template <typename T>
std::vector<Complex<T>> poly_roots(const UnivariatePolynomial<T>& p, const T& tol, int max_iter = 0) {
    using std::abs;
    using std::log;
    using std::exp;
    using std::pow;
    using C = Complex<T>;

    const int n = p.degree();
    if (n < 1) throw InvalidArgument("poly_roots: degree must be at least 1");
    if (!(tol > 0)) throw InvalidArgument("poly_roots: tol must be positive");
    if (max_iter <= 0) max_iter = 200 + 20 * n;

    const auto& a = p.coeffs();
    if (n == 1) return {C(T(-a[0] / a[1]))};

    // initial guesses on a circle from the Cauchy-type bound
    T lead = abs(a[n]);
    T radius(0);
    for (int k = 0; k < n; ++k) {
        if (a[k] == 0) continue;
        T r = pow(abs(a[k]) / lead, T(1) / T(n - k));
        if (r > radius) radius = r;
    }
    if (radius == 0) radius = 1;
    const T pi = boost::math::constants::pi<T>();
    std::vector<C> z(n);
    for (int k = 0; k < n; ++k) z[k] = polar(radius, T(2 * pi * k / n + T(0.4) / n));

    auto dp = p.derivative();
    T amax(0);
    for (const auto& c : a) amax = std::max(amax, T(abs(c)));
    const T step_tol = precision_tol<T>(3);
    std::vector<T> absa(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) absa[k] = abs(a[k]);
    const UnivariatePolynomial<T> bound(absa);

    std::vector<bool> done(n, false);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            C pv = p(z[i]);
            C dv = dp(z[i]);
            if (abs(pv) <= step_tol * bound(T(abs(z[i])))) { done[i] = true; continue; }
            C ratio = pv / dv;
            C sum(T(0));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                sum += C(T(1)) / (z[i] - z[j]);
            }
            C w = ratio / (C(T(1)) - ratio * sum);
            z[i] -= w;
            T mag = abs(z[i]);
            if (abs(w) <= step_tol * (mag > 1 ? mag : T(1))) done[i] = true;
            else all = false;
        }
        if (all) break;
        if (it + 1 == max_iter) throw NonConvergence("poly_roots: iteration limit reached");
    }

    for (const auto& r : z) {
        T mag = abs(r);
        T scale = amax * pow(mag > 1 ? mag : T(1), n);
        if (abs(p(r)) / scale > tol) {
            throw NonConvergence("poly_roots: residual above tolerance");
        }
    }
    return z;
}

}  // namespace asymp
