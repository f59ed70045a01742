#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "asymp/numeric/scalar.hpp"

namespace asymp {

/// Samples (x, f, f', f'') of a solution on an increasing grid.
template <typename T>
struct NumericProfile {
    std::vector<T> xs, f, f1, f2;
    struct Meta {
        std::string method;
        T step{0};
        T domain_truncation{0};
    } meta;

    std::size_t size() const { return xs.size(); }

    void push(const T& x, const T& v, const T& d1, const T& d2) {
        xs.push_back(x);
        f.push_back(v);
        f1.push_back(d1);
        f2.push_back(d2);
    }

    const std::vector<T>& component(int derivative_order) const {
        switch (derivative_order) {
            case 0: return f;
            case 1: return f1;
            case 2: return f2;
        }
        throw InvalidArgument("derivative order must be 0, 1 or 2");
    }
};

template <typename T>
void write_csv(std::ostream& os, const NumericProfile<T>& p) {
    os << "x,f,f1,f2\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << to_string(p.xs[i]) << ',' << to_string(p.f[i]) << ',' << to_string(p.f1[i]) << ','
           << to_string(p.f2[i]) << '\n';
}

}  // namespace asymp
