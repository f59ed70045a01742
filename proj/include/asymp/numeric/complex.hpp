#pragma once

#include <cmath>
#include <ostream>

namespace asymp {

template <typename T>
struct Complex {
    T re{0}, im{0};

    Complex() = default;
    Complex(const T& r) : re(r), im(0) {}
    Complex(const T& r, const T& i) : re(r), im(i) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const T& s, const Complex& a) { return {s * a.re, s * a.im}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        // Smith's algorithm
        using std::abs;
        if (abs(b.re) >= abs(b.im)) {
            T r = b.im / b.re;
            T d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        T r = b.re / b.im;
        T d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

template <typename T>
T abs(const Complex<T>& z) {
    using std::abs;
    using std::sqrt;
    T a = abs(z.re), b = abs(z.im);
    if (a < b) std::swap(a, b);
    if (a == 0) return a;
    T r = b / a;
    return a * sqrt(1 + r * r);
}

template <typename T>
Complex<T> polar(const T& r, const T& theta) {
    using std::cos;
    using std::sin;
    return {r * cos(theta), r * sin(theta)};
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Complex<T>& z) {
    return os << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? T(-z.im) : z.im) << 'i';
}

}  // namespace asymp
