#include <gtest/gtest.h>

#include <random>

#include "asymp/asymp.hpp"

using namespace asymp;

namespace {

Real R(const char* s) { return from_string<Real>(s); }

class Draw {
public:
    explicit Draw(unsigned seed) : rng_(seed) {}
    Real operator()(double lo, double hi) { return Real(std::uniform_real_distribution<double>(lo, hi)(rng_)); }
    int order(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937 rng_;
};

TruncatedSeries<Real> random_series(Draw& d, int order, double lead_lo = 0.5) {
    std::vector<Real> c{d(lead_lo, 2.0)};
    for (int n = 1; n <= order; ++n) c.push_back(d(-1, 1));
    return TruncatedSeries<Real>(std::move(c));
}

constexpr int kTrials = 20;

}  // namespace

// ------------------------------------------------ Taylor consistency, all families

TEST(TaylorConsistency, SoftSphere) {
    ScopedPrecision<Real> g(Context{60});
    Draw d(11);
    for (int t = 0; t < kTrials; ++t) {
        const int N = d.order(2, 10);
        VirialInput<Real> v;
        v.coeffs = random_series(d, N - 1).coeffs;
        v.coeffs[0] = 1;
        v.h = Real(d.order(4, 12));
        auto a = build_soft_sphere(v, N);
        EXPECT_LE(series_mismatch(taylor_expansion(a, N - 1), TruncatedSeries<Real>(v.coeffs), N - 1), precision_tol<Real>(10))
            << "N = " << N;
    }
}

TEST(TaylorConsistency, CriticalIsotherm) {
    ScopedPrecision<Real> g(Context{60});
    Draw d(12);
    for (int t = 0; t < kTrials; ++t) {
        const int N = d.order(1, 10);
        VirialInput<Real> v;
        v.coeffs = random_series(d, N - 1).coeffs;
        v.Pc = d(0.1, 2);
        v.rho_c = d(0.5, 2);
        v.delta = d(3, 6);
        v.kTc = d(0.5, 5);
        auto a = build_critical_isotherm(v, N);
        std::vector<Real> p{Real(0)};
        for (const auto& b : v.coeffs) p.push_back(*v.kTc * b);
        EXPECT_LE(series_mismatch(taylor_expansion(a, N), TruncatedSeries<Real>(p), N), precision_tol<Real>(10))
            << "N = " << N;
    }
}

TEST(TaylorConsistency, OffsetReciprocal) {
    ScopedPrecision<Real> g(Context{60});
    Draw d(13);
    for (int t = 0; t < kTrials; ++t) {
        const int N = d.order(5, 30);
        const Real k = d(-1, -0.1), c = d(0.5, 3);
        auto a = build_offset_reciprocal(BoundaryLayer::Sakiadis, k, c, N);
        EXPECT_LE(series_mismatch(taylor_expansion(a, N), sakiadis_series(k, N), N), precision_tol<Real>(10)) << N;
        const Real kb = d(0.1, 0.6), b = d(-3, -0.5);
        auto ab = build_offset_reciprocal(BoundaryLayer::Blasius, kb, b, N);
        EXPECT_LE(series_mismatch(taylor_expansion(ab, N), blasius_series(kb, N), N), precision_tol<Real>(10)) << N;
    }
}

// Re-expansion sums A_n (-nC/2)^k / k! with heavy cancellation, so rounding
// the coefficients alone costs digits; the bound scales with that cancellation.
Real exp_cancellation(const ExpSeriesApproximant<Real>& a, const TruncatedSeries<Real>& b, int last) {
    Real worst(1);
    for (int k = 0; k <= last; ++k) {
        Real s(0);
        for (int n = 1; n <= a.N; ++n) s += abs(a.A[n - 1]) * pow(Real(n) * a.C / 2, k);
        Real f(1);
        for (int j = 2; j <= k; ++j) f *= j;
        worst = max(worst, s / f / max(Real(1), abs(b[k])));
    }
    return worst;
}

TEST(TaylorConsistency, ExpSeries) {
    ScopedPrecision<Real> g(Context{60});
    Draw d(14);
    for (int t = 0; t < kTrials; ++t) {
        const int N = d.order(3, 30);
        const Real k = d(-1, -0.1), C = d(0.8, 3);
        auto a = build_exp_series(k, C, N);
        auto ref = sakiadis_series(k, std::max(N - 1, 3));
        EXPECT_LE(series_mismatch(taylor_expansion(a, N - 1), ref, N - 1),
                  precision_tol<Real>(10) * exp_cancellation(a, ref, N - 1))
            << N;
    }
}

TEST(TaylorConsistency, PadeReciprocal) {
    ScopedPrecision<Real> g(Context{60});
    Draw d(15);
    for (int t = 0; t < kTrials; ++t) {
        const int N = 2 * d.order(1, 12);
        const Real z = d(-3, -0.2);
        auto a = build_fp(z, N);
        EXPECT_LE(series_mismatch(taylor_expansion(a, N), fp_series(FpParams<Real>{z}, N), N), precision_tol<Real>(10)) << N;
    }
}

// ------------------------------------------------------------- series algebra

TEST(SeriesAlgebra, PowerInverse) {
    ScopedPrecision<Real> g(Context{50});
    Draw d(21);
    for (int t = 0; t < kTrials; ++t) {
        auto a = random_series(d, d.order(1, 15));
        const Real s = d(-3, 3);
        auto p = cauchy_product(pow_real(a, s), pow_real(a, Real(-s)));
        EXPECT_LE(abs(p[0] - 1), precision_tol<Real>(10));
        for (int n = 1; n <= p.order(); ++n) EXPECT_LE(abs(p[n]), precision_tol<Real>(10)) << n;
    }
}

TEST(SeriesAlgebra, ReciprocalIsInvolution) {
    ScopedPrecision<Real> g(Context{50});
    Draw d(22);
    for (int t = 0; t < kTrials; ++t) {
        auto a = random_series(d, d.order(1, 15));
        auto b = reciprocal(reciprocal(a));
        for (int n = 0; n <= a.order(); ++n) EXPECT_LE(abs(b[n] - a[n]), precision_tol<Real>(10)) << n;
    }
}

TEST(SeriesAlgebra, ProductCommutesAndAssociates) {
    ScopedPrecision<Real> g(Context{50});
    Draw d(23);
    for (int t = 0; t < kTrials; ++t) {
        const int m = d.order(0, 12);
        auto a = random_series(d, m), b = random_series(d, m), c = random_series(d, m);
        auto ab = cauchy_product(a, b), ba = cauchy_product(b, a);
        auto l = cauchy_product(ab, c), r = cauchy_product(a, cauchy_product(b, c));
        for (int n = 0; n <= m; ++n) {
            EXPECT_EQ(ab[n], ba[n]);
            EXPECT_LE(abs(l[n] - r[n]), precision_tol<Real>(5));
        }
    }
}

// ------------------------------------------------------- derivatives by jets

TEST(Derivatives, JetsMatchCentralDifferences) {
    ScopedPrecision<Real> g(Context::fast());
    Draw d(31);
    const Real h = R("1e-4");
    auto check = [&](const auto& a, const Real& x) {
        auto j = eval_approximant(a, x);
        auto p = eval_approximant(a, Real(x + h)), m = eval_approximant(a, Real(x - h));
        Real d1 = (p.v - m.v) / (2 * h), d2 = (p.v - 2 * j.v + m.v) / (h * h);
        EXPECT_LE(abs(d1 - j.d1), R("1e-6") * (1 + abs(j.d1))) << to_string(x);
        EXPECT_LE(abs(d2 - j.d2), R("1e-4") * (1 + abs(j.d2))) << to_string(x);
        EXPECT_LE(abs((p.d1 - m.d1) / (2 * h) - j.d2), R("1e-6") * (1 + abs(j.d2))) << to_string(x);
    };
    for (int t = 0; t < kTrials; ++t) {
        const Real x = d(0.1, 3);
        check(build_offset_reciprocal(BoundaryLayer::Sakiadis, R("-0.4430"), R("1.6284"), 11), x);
        check(build_exp_series(R("-0.44375"), R("1.6161"), 13), x);
        check(build_fp(R("-2.39196"), 16), x);
        VirialInput<Real> v;
        v.coeffs = {Real(1), R("0.5"), R("0.2")};
        v.h = Real(12);
        check(build_soft_sphere(v, 3), x);
    }
}

// --------------------------------------------------------- asymptotic limits

TEST(Asymptotics, FarFieldConstants) {
    ScopedPrecision<Real> g(Context{60});
    const Real x(1000);
    auto e = build_exp_series(R("-0.4437"), R("1.6161"), 15);
    EXPECT_LE(abs(eval_approximant(e, x).v - e.C), precision_tol<Real>(1));
    auto fp = sacrificed_fp(R("-2.39196"), 16);
    EXPECT_LT(abs(eval_approximant(fp, x).v), R("1e-30"));
}

TEST(Asymptotics, ExpSecondCoefficientTrend) {
    // A_2 tends to G^2 / (4 C) as the order grows
    ScopedPrecision<Real> g(Context{60});
    std::array<Real, 2> guess{R("-0.443748"), R("1.616125")};
    std::vector<Real> gap;
    for (int N : {15, 20, 25, 30}) {
        auto r = solve_sakiadis_exp<Real>(N, guess);
        guess = {r.x, r.y};
        auto a = sacrificed_exp_series(r.x, r.y, N);
        gap.push_back(abs(a.A[1] - a.G() * a.G() / (4 * a.C)));
    }
    for (std::size_t i = 1; i < gap.size(); ++i) EXPECT_LT(gap[i], gap[i - 1]) << i;
    EXPECT_LT(gap.back(), R("1e-3"));
}

// -------------------------------------------------------------------- virial

TEST(Virial, SyntheticFluidIsotherm) {
    ScopedPrecision<Real> g(Context{50});
    auto v = load_virial<Real>(std::string(ASYMP_DATA_DIR) + "/synthetic_fluid.json");
    auto a = build_critical_isotherm(v, 12);
    for (const char* rs : {"0.2", "0.6", "1.0", "1.2"}) {
        const Real rho = R(rs);
        Real exact = *v.Pc - *v.Pc * pow(1 - rho / *v.rho_c, *v.delta) * exp(-rho / 2);
        EXPECT_LT(abs(eval_approximant(a, rho).v - exact), R("1e-8")) << rs;
    }
    EXPECT_EQ(eval_approximant(a, *v.rho_c).v, *v.Pc);
}
