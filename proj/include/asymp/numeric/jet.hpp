#pragma once

#include <cmath>
#include <ostream>
#include <type_traits>

namespace asymp {

/// Value with first and second derivative in one variable.
template <typename T>
struct Jet2 {
    T v{0}, d1{0}, d2{0};

    Jet2() = default;
    Jet2(const T& c) : v(c), d1(0), d2(0) {}
    Jet2(const T& value, const T& first, const T& second) : v(value), d1(first), d2(second) {}

    static Jet2 variable(const T& x) { return Jet2(x, T(1), T(0)); }

    Jet2& operator+=(const Jet2& o) { v += o.v; d1 += o.d1; d2 += o.d2; return *this; }
    Jet2& operator-=(const Jet2& o) { v -= o.v; d1 -= o.d1; d2 -= o.d2; return *this; }
    Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
    Jet2& operator/=(const Jet2& o) { return *this = *this / o; }

    friend Jet2 operator-(const Jet2& a) { return Jet2(-a.v, -a.d1, -a.d2); }
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        return Jet2(a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2);
    }
    friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

    friend Jet2 operator+(const Jet2& a, const T& c) { return Jet2(T(a.v + c), a.d1, a.d2); }
    friend Jet2 operator+(const T& c, const Jet2& a) { return a + c; }
    friend Jet2 operator-(const Jet2& a, const T& c) { return Jet2(T(a.v - c), a.d1, a.d2); }
    friend Jet2 operator-(const T& c, const Jet2& a) { return Jet2(T(c - a.v), -a.d1, -a.d2); }
    friend Jet2 operator*(const Jet2& a, const T& c) { return Jet2(T(a.v * c), T(a.d1 * c), T(a.d2 * c)); }
    friend Jet2 operator*(const T& c, const Jet2& a) { return a * c; }
    friend Jet2 operator/(const Jet2& a, const T& c) { return Jet2(T(a.v / c), T(a.d1 / c), T(a.d2 / c)); }
    friend Jet2 operator/(const T& c, const Jet2& a) { return c * reciprocal(a); }
    Jet2& operator*=(const T& c) { v *= c; d1 *= c; d2 *= c; return *this; }
    Jet2& operator/=(const T& c) { v /= c; d1 /= c; d2 /= c; return *this; }

    friend bool operator<(const Jet2& a, const Jet2& b) { return a.v < b.v; }
    friend bool operator>(const Jet2& a, const Jet2& b) { return a.v > b.v; }

    friend Jet2 reciprocal(const Jet2& a) {
        T r = 1 / a.v;
        T r2 = r * r;
        return a.chain(r, -r2, 2 * r2 * r);
    }

    /// g(a) given g, g', g'' at a.v.
    Jet2 chain(const T& g0, const T& g1, const T& g2) const {
        return Jet2(g0, g1 * d1, g2 * d1 * d1 + g1 * d2);
    }
};

template <typename T>
Jet2<T> exp(const Jet2<T>& a) {
    using std::exp;
    T e = exp(a.v);
    return a.chain(e, e, e);
}

template <typename T>
Jet2<T> log(const Jet2<T>& a) {
    using std::log;
    T r = 1 / a.v;
    return a.chain(log(a.v), r, -r * r);
}

template <typename T>
Jet2<T> sqrt(const Jet2<T>& a) {
    using std::sqrt;
    T s = sqrt(a.v);
    T g1 = 1 / (2 * s);
    return a.chain(s, g1, -g1 / (2 * a.v));
}

/// a^s for real exponent s; requires a.v > 0 unless s is a small integer.
template <typename T>
Jet2<T> pow(const Jet2<T>& a, const T& s) {
    using std::pow;
    T p = pow(a.v, s - 2);
    T g1 = s * p * a.v;
    return a.chain(pow(a.v, s), g1, s * (s - 1) * p);
}

template <typename T>
Jet2<T> abs(const Jet2<T>& a) {
    return a.v < 0 ? -a : a;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Jet2<T>& a) {
    return os << '(' << a.v << ", " << a.d1 << ", " << a.d2 << ')';
}

}  // namespace asymp
