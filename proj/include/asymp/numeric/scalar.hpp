#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <type_traits>

#include <boost/multiprecision/mpfr.hpp>

#include "asymp/numeric/errors.hpp"

namespace asymp {

using Real = boost::multiprecision::mpfr_float;

template <typename T>
inline constexpr bool is_mp_v = boost::multiprecision::is_number<T>::value;

/// Working precision in decimal digits. Passed to every entry point that
/// allocates new scalars.
struct Context {
    int digits = 60;

    static Context fast() { return Context{15}; }
};

inline void check_context(const Context& ctx) {
    if (ctx.digits < 15) throw InvalidArgument("precision must be at least 15 digits");
}

/// Sets the mpfr default precision for the lifetime of the guard and restores
/// the previous value afterwards. A no-op for builtin floating types.
template <typename T = Real>
class ScopedPrecision {
public:
    explicit ScopedPrecision(const Context& ctx) {
        check_context(ctx);
        if constexpr (is_mp_v<T>) {
            saved_ = T::default_precision();
            T::default_precision(static_cast<unsigned>(ctx.digits));
        }
    }
    ~ScopedPrecision() {
        if constexpr (is_mp_v<T>) T::default_precision(saved_);
    }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_ = 0;
};

template <typename T>
int digits_of() {
    if constexpr (is_mp_v<T>) {
        return static_cast<int>(T::default_precision());
    } else {
        return std::numeric_limits<T>::digits10;
    }
}

/// 10^(k - digits) at the current precision of T.
template <typename T>
T precision_tol(int k) {
    using std::pow;
    return pow(T(10), T(k - digits_of<T>()));
}

template <typename T>
T from_string(const std::string& s) {
    if constexpr (is_mp_v<T>) {
        return T(s);
    } else {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw InvalidArgument("not a number: " + s);
        return static_cast<T>(v);
    }
}

/// Decimal string that parses back to the identical value.
template <typename T>
std::string to_string(const T& x) {
    if constexpr (is_mp_v<T>) {
        return x.str(0, std::ios_base::scientific);
    } else {
        std::ostringstream os;
        os.precision(std::numeric_limits<T>::max_digits10);
        os << std::scientific << x;
        return os.str();
    }
}

/// Decimal string with a fixed number of significant digits.
template <typename T>
std::string to_string(const T& x, int sig) {
    std::ostringstream os;
    os.precision(sig - 1);
    os << std::scientific << x;
    return os.str();
}

template <typename T>
double to_double(const T& x) {
    return static_cast<double>(x);
}

template <typename T>
bool is_finite(const T& x) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(x);
}

}  // namespace asymp
