#pragma once

#include <cmath>

#include "asymp/approximants/evaluate.hpp"
#include "asymp/reference/profile.hpp"

namespace asymp {

/// max |approximant - reference| of the chosen derivative over the profile
/// samples in [x_lo, x_hi]. The reference may use a different scalar type.
template <typename T, typename A, typename R>
T error_norm(const A& approximant, const NumericProfile<R>& ref, int derivative_order, const T& x_lo, const T& x_hi) {
    using std::abs;
    if (derivative_order != 0 && derivative_order != 2)
        throw InvalidArgument("error_norm: derivative order must be 0 or 2");
    if (ref.size() == 0 || T(ref.xs.front()) > x_lo || T(ref.xs.back()) < x_hi)
        throw DomainMismatch("error_norm: reference does not cover the interval");
    const auto& comp = ref.component(derivative_order);
    T worst(0);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        T x(ref.xs[i]);
        if (x < x_lo || x > x_hi) continue;
        auto j = eval_approximant(approximant, x);
        T v = derivative_order == 0 ? j.v : j.d2;
        T e = abs(v - T(comp[i]));
        if (e > worst) worst = e;
    }
    return worst;
}

}  // namespace asymp
