#pragma once

#include <algorithm>
#include <cmath>
#include <variant>
#include <vector>

#include "asymp/approximants/families.hpp"
#include "asymp/numeric/jet.hpp"

namespace asymp {

namespace detail {
/// 1 + sum A_n x^n as a jet, with sum |A_n x^n| for pole detection.
template <typename T>
Jet2<T> inner_polynomial(const std::vector<T>& A, const T& x, T* magnitude = nullptr) {
    using std::abs;
    Jet2<T> t = Jet2<T>::variable(x);
    Jet2<T> r(A.back());
    for (int n = static_cast<int>(A.size()) - 2; n >= 0; --n) r = r * t + A[n];
    if (magnitude) {
        T m(0), p(1), ax = abs(x);
        for (const auto& c : A) {
            m += abs(c) * p;
            p *= ax;
        }
        *magnitude = m;
    }
    return r;
}

template <typename T>
void check_pole(const Jet2<T>& d, const T& magnitude) {
    using std::abs;
    if (abs(d.v) <= precision_tol<T>(4) * magnitude)
        throw PoleEncountered("approximant denominator vanishes");
}
}  // namespace detail

template <typename T>
Jet2<T> eval_approximant(const PowerLawApproximant<T>& a, const T& x) {
    T mag;
    auto d = detail::inner_polynomial(a.A, x, &mag);
    if (!(d.v > 0)) throw PoleEncountered("power-law base is not positive");
    return pow(d, a.exponent());
}

template <typename T>
Jet2<T> eval_approximant(const CriticalIsothermApproximant<T>& a, const T& rho) {
    Jet2<T> r = Jet2<T>::variable(rho);
    Jet2<T> poly = detail::inner_polynomial(a.A, rho);
    Jet2<T> base = T(1) - r / a.rho_c;
    if (!(base.v > 0)) {
        if (base.v == 0) return Jet2<T>(a.Pc);
        throw DomainMismatch("critical isotherm evaluated beyond rho_c");
    }
    return a.Pc - poly * pow(base, a.delta);
}

template <typename T>
Jet2<T> eval_approximant(const OffsetReciprocalApproximant<T>& a, const T& eta) {
    T mag;
    auto d = detail::inner_polynomial(a.A, eta, &mag);
    detail::check_pole(d, mag);
    Jet2<T> f = a.constant - a.constant * reciprocal(d);
    if (a.linear_term()) f = f + Jet2<T>::variable(eta);
    return f;
}

template <typename T>
Jet2<T> eval_approximant(const ExpSeriesApproximant<T>& a, const T& eta) {
    using std::abs;
    using std::exp;
    std::vector<Jet2<T>> terms;
    terms.reserve(a.A.size());
    for (int n = 1; n <= a.N; ++n) {
        const T& An = a.A[n - 1];
        if (An == 0) continue;
        T rate = -(n * a.C) / 2;
        T t = An * exp(rate * eta);
        terms.emplace_back(t, T(rate * t), T(rate * rate * t));
    }
    std::sort(terms.begin(), terms.end(), [](const Jet2<T>& p, const Jet2<T>& q) { return abs(p.v) < abs(q.v); });
    Jet2<T> s(T(0));
    for (const auto& t : terms) s += t;
    return s + a.C;
}

template <typename T>
Jet2<T> eval_approximant(const PadeReciprocalApproximant<T>& a, const T& r) {
    T mag;
    auto d = detail::inner_polynomial(a.A, r, &mag);
    detail::check_pole(d, mag);
    return a.z * reciprocal(d);
}

template <typename T>
using AnyApproximant = std::variant<PowerLawApproximant<T>, CriticalIsothermApproximant<T>,
                                    OffsetReciprocalApproximant<T>, ExpSeriesApproximant<T>,
                                    PadeReciprocalApproximant<T>>;

template <typename T>
Jet2<T> eval_approximant(const AnyApproximant<T>& a, const T& x) {
    return std::visit([&](const auto& v) { return eval_approximant(v, x); }, a);
}

}  // namespace asymp
