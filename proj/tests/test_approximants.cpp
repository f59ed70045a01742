#include <gtest/gtest.h>

#include "asymp/asymp.hpp"

using namespace asymp;

namespace {

Real R(const char* s) { return from_string<Real>(s); }

VirialInput<Real> critical_input(std::vector<Real> B) {
    VirialInput<Real> v;
    v.coeffs = std::move(B);
    v.Pc = Real(1);
    v.rho_c = Real(1);
    v.delta = R("4.789");
    v.kTc = Real(1);
    return v;
}

}  // namespace

// ---------------------------------------------------------------- soft sphere

TEST(SoftSphere, FirstCoefficient) {
    ScopedPrecision<Real> g(Context{40});
    VirialInput<Real> v;
    v.coeffs = {Real(1), R("0.7")};
    v.h = Real(6);
    auto a = build_soft_sphere(v, 2);
    EXPECT_EQ(a.A[0], 1);
    EXPECT_LE(abs(a.A[1] - R("0.7") / 2), precision_tol<Real>(1));
    EXPECT_EQ(a.exponent(), 2);
}

TEST(SoftSphere, IdealGas) {
    ScopedPrecision<Real> g(Context{40});
    VirialInput<Real> v;
    v.coeffs = {Real(1), Real(0), Real(0), Real(0)};
    v.h = Real(12);
    auto a = build_soft_sphere(v, 4);
    for (int n = 1; n < 4; ++n) EXPECT_EQ(a.A[n], 0);
    EXPECT_EQ(eval_approximant(a, R("0.8")).v, 1);
}

TEST(SoftSphere, ReexpansionMatchesSyntheticSeries) {
    ScopedPrecision<Real> g(Context{60});
    VirialInput<Real> v;
    v.coeffs = {Real(1), R("0.5"), R("0.2"), R("0.1")};
    v.h = Real(4);
    auto a = build_soft_sphere(v, 4);
    EXPECT_LE(series_mismatch(taylor_expansion(a, 3), TruncatedSeries<Real>(v.coeffs), 3), precision_tol<Real>(12));
}

TEST(SoftSphere, AsymptoticExponent) {
    ScopedPrecision<Real> g(Context{60});
    VirialInput<Real> v;
    v.coeffs = {Real(1), R("0.5"), R("0.2"), R("0.1")};
    v.h = Real(4);
    auto a = build_soft_sphere(v, 4);
    // Z_A / x^{h/3} tends to a constant
    Real r1 = eval_approximant(a, Real(1000)).v / pow(Real(1000), *v.h / 3);
    Real r2 = eval_approximant(a, Real(2000)).v / pow(Real(2000), *v.h / 3);
    EXPECT_LT(abs(r1 / r2 - 1), R("1e-2"));
}

TEST(SoftSphere, Errors) {
    VirialInput<Real> v;
    v.coeffs = {Real(1), Real(1)};
    v.h = Real(12);
    EXPECT_THROW(build_soft_sphere(v, 3), MissingCoefficients);
    v.h.reset();
    EXPECT_THROW(build_soft_sphere(v, 2), InvalidArgument);
}

// ---------------------------------------------------------- critical isotherm

TEST(CriticalIsotherm, LeadingCoefficients) {
    ScopedPrecision<Real> g(Context{40});
    auto v = critical_input({Real(1), R("0.5")});
    v.Pc = R("0.3");
    v.rho_c = R("0.8");
    v.kTc = R("1.7");
    auto a = build_critical_isotherm(v, 2);
    EXPECT_EQ(a.A[0], *v.Pc);
    EXPECT_LE(abs(a.A[1] - (*v.Pc * *v.delta / *v.rho_c - *v.kTc)), precision_tol<Real>(2));
    EXPECT_EQ(eval_approximant(a, Real(0)).v, 0);
    EXPECT_EQ(eval_approximant(a, *v.rho_c).v, *v.Pc);
}

TEST(CriticalIsotherm, ReexpansionMatchesVirialSeries) {
    ScopedPrecision<Real> g(Context{60});
    auto v = critical_input({Real(1), R("0.5")});
    auto a = build_critical_isotherm(v, 2);
    std::vector<Real> p{Real(0), Real(1), R("0.5")};
    EXPECT_LE(series_mismatch(taylor_expansion(a, 2), TruncatedSeries<Real>(p), 2), precision_tol<Real>(10));
}

TEST(CriticalIsotherm, Errors) {
    VirialInput<Real> v;
    v.coeffs = {Real(1)};
    EXPECT_THROW(build_critical_isotherm(v, 1), MissingCriticalConstants);
    auto w = critical_input({Real(1)});
    EXPECT_THROW(build_critical_isotherm(w, 2), MissingCoefficients);
    auto a = build_critical_isotherm(w, 1);
    EXPECT_THROW(eval_approximant(a, Real(2)), DomainMismatch);
}

// --------------------------------------------------------- offset reciprocal

TEST(OffsetReciprocal, FirstCoefficients) {
    ScopedPrecision<Real> g(Context{40});
    auto s = build_offset_reciprocal(BoundaryLayer::Sakiadis, R("-0.44"), R("1.6"), 6);
    EXPECT_EQ(s.A[0], 1);
    EXPECT_LE(abs(s.A[1] - 1 / R("1.6")), precision_tol<Real>(1));
    auto b = build_offset_reciprocal(BoundaryLayer::Blasius, R("0.33"), R("-1.72"), 6);
    EXPECT_LE(abs(b.A[1] + 1 / R("-1.72")), precision_tol<Real>(1));
    EXPECT_THROW(build_offset_reciprocal(BoundaryLayer::Sakiadis, R("-0.44"), Real(0), 6), ZeroAsymptoticConstant);
}

TEST(OffsetReciprocal, BoundaryValues) {
    ScopedPrecision<Real> g(Context{40});
    const Real k = R("-0.4430");
    auto s = eval_approximant(build_offset_reciprocal(BoundaryLayer::Sakiadis, k, R("1.6284"), 11), Real(0));
    EXPECT_LE(abs(s.v), precision_tol<Real>(1));
    EXPECT_LE(abs(s.d1 - 1), precision_tol<Real>(1));
    EXPECT_LE(abs(s.d2 - k), precision_tol<Real>(1));
    const Real kb = R("0.332");
    auto b = eval_approximant(build_offset_reciprocal(BoundaryLayer::Blasius, kb, R("-1.72"), 20), Real(0));
    EXPECT_LE(abs(b.v), precision_tol<Real>(1));
    EXPECT_LE(abs(b.d1), precision_tol<Real>(1));
    EXPECT_LE(abs(b.d2 - kb), precision_tol<Real>(1));
}

TEST(OffsetReciprocal, ReexpansionAtTableRow) {
    ScopedPrecision<Real> g(Context{60});
    const Real k = R("-0.4430");
    auto a = build_offset_reciprocal(BoundaryLayer::Sakiadis, k, R("1.6284"), 11);
    EXPECT_LE(series_mismatch(taylor_expansion(a, 11), sakiadis_series(k, 11), 11), precision_tol<Real>(10));
}

TEST(OffsetReciprocal, FarFieldLimits) {
    ScopedPrecision<Real> g(Context{60});
    auto s = solve_sakiadis_simple<Real>(11, {R("-0.443"), R("1.628")});
    auto a = sacrificed_offset_reciprocal(BoundaryLayer::Sakiadis, s.x, s.y, 11);
    EXPECT_EQ(a.A[11], 0);
    EXPECT_EQ(a.A[10], 0);
    EXPECT_LT(abs(eval_approximant(a, Real(1000)).v - s.y), R("1e-3"));
    auto b = solve_blasius<Real>(20, {R("0.3309"), R("-1.7317")});
    auto ab = sacrificed_offset_reciprocal(BoundaryLayer::Blasius, b.x, b.y, 20);
    EXPECT_LT(abs(eval_approximant(ab, Real(1000)).v - 1000 - b.y), R("1e-3"));
}

TEST(OffsetReciprocal, PoleIsReported) {
    ScopedPrecision<Real> g(Context{40});
    OffsetReciprocalApproximant<Real> a{BoundaryLayer::Sakiadis, Real(1), Real(0), 1, {Real(1), Real(-1)}};
    EXPECT_THROW(eval_approximant(a, Real(1)), PoleEncountered);
}

// ---------------------------------------------------------------- exp series

TEST(ExpSeries, SingleTerm) {
    ScopedPrecision<Real> g(Context{40});
    auto a = build_exp_series(R("-0.44"), R("1.6"), 1);
    ASSERT_EQ(a.A.size(), 1u);
    EXPECT_EQ(a.A[0], -R("1.6"));
    EXPECT_EQ(a.G(), a.A[0]);
}

TEST(ExpSeries, RightHandSideRows) {
    ScopedPrecision<Real> g(Context{40});
    const Real C = R("1.6");
    std::vector<Real> a{Real(0), Real(1), R("-0.22"), Real(0), R("0.01")};
    auto r = exp_series_rhs(a, C, 5);
    EXPECT_EQ(r[0], -C);
    Real m = Real(-2) / C;
    EXPECT_LE(abs(r[1] - m * a[1]), precision_tol<Real>(1));
    EXPECT_LE(abs(r[2] - 2 * m * m * a[2]), precision_tol<Real>(1));
    EXPECT_LE(abs(r[4] - 24 * m * m * m * m * a[4]), precision_tol<Real>(1));
}

TEST(ExpSeries, ReexpansionAtTableRow) {
    ScopedPrecision<Real> g(Context{60});
    const Real k = R("-0.443748473247");
    auto a = build_exp_series(k, R("1.61612459984"), 15);
    EXPECT_LE(series_mismatch(taylor_expansion(a, 14), sakiadis_series(k, 14), 14), precision_tol<Real>(15));
}

TEST(ExpSeries, FarFieldIsC) {
    ScopedPrecision<Real> g(Context{40});
    auto a = build_exp_series(R("-0.4437"), R("1.616"), 10);
    EXPECT_LT(abs(eval_approximant(a, Real(200)).v - R("1.616")), R("1e-30"));
    EXPECT_THROW(build_exp_series(R("-0.4"), Real(-1), 5), InvalidArgument);
}

// ------------------------------------------------------------ pade reciprocal

TEST(Pade, SecondCoefficient) {
    ScopedPrecision<Real> g(Context{40});
    const Real z = R("-2.39");
    auto a = build_fp(z, 6);
    EXPECT_LE(abs(a.A[2] + (1 + z) / 4), precision_tol<Real>(1));
    for (int n = 1; n <= 6; n += 2) EXPECT_EQ(a.A[n], 0);
    EXPECT_EQ(build_fp(Real(-1), 4).A[2], 0);
    EXPECT_THROW(build_fp(Real(0), 4), ZeroCenterValue);
    EXPECT_THROW(build_fp(Real(-1), 5), InvalidArgument);
}

TEST(Pade, ReexpansionAtNumericZ) {
    ScopedPrecision<Real> g(Context{60});
    const Real z = R("-2.3919564032");
    auto a = build_fp(z, 16);
    EXPECT_LE(series_mismatch(taylor_expansion(a, 16), fp_series(FpParams<Real>{z}, 16), 16), precision_tol<Real>(10));
    EXPECT_EQ(eval_approximant(a, Real(0)).v, z);
}

// ----------------------------------------------------------- singularities

TEST(Singularity, BlasiusOnNegativeRealAxis) {
    ScopedPrecision<Real> g(Context{60});
    auto r = solve_blasius<Real>(50, {R("0.33205731"), R("-1.72078801")});
    auto s = singularity_radius(sacrificed_offset_reciprocal(BoundaryLayer::Blasius, r.x, r.y, 50));
    EXPECT_LE(abs(s.S - R("5.68933")), R("1e-5"));
    EXPECT_LT(s.eta_s.re, 0);
    EXPECT_LT(abs(s.eta_s.im), R("1e-10"));
}

TEST(Singularity, FpNearImaginaryAxis) {
    ScopedPrecision<Real> g(Context{60});
    auto p = predict_fp_z<Real>({16});
    Real best = p.records.front().params[0];
    for (const auto& r : p.records)
        if (abs(r.params[0] + R("2.39196")) < abs(best + R("2.39196"))) best = r.params[0];
    auto s = singularity_radius(sacrificed_fp(best, 16));
    EXPECT_LE(abs(s.S - R("2.61154")), R("1e-5"));
    EXPECT_LT(abs(s.eta_s.re), R("1e-3"));
}

// --------------------------------------------------------- effective constants

TEST(EffectiveConstant, ExpSeriesApproachesG) {
    ScopedPrecision<Real> g(Context{60});
    auto r = solve_sakiadis_exp<Real>(30, {R("-0.443748313369"), R("1.61612544681")});
    auto a = sacrificed_exp_series(r.x, r.y, 30);
    Real G = effective_constant(a, Real(40));
    EXPECT_LT(abs(G - R("-2.1313459241")), R("1e-6"));
}

TEST(Plateau, PicksFlattestWindow) {
    std::vector<double> xs, ys;
    for (int i = 0; i <= 100; ++i) {
        double x = i * 0.1;
        xs.push_back(x);
        ys.push_back(x < 4 ? x : (x < 7 ? 4.0 : 4.0 + (x - 7) * (x - 7)));
    }
    auto p = find_plateau(xs, ys, 2.0);
    EXPECT_NEAR(p.value, 4.0, 1e-12);
    EXPECT_NEAR(p.spread, 0.0, 1e-12);
    EXPECT_GE(p.x_begin, 4.0 - 1e-9);
    EXPECT_LE(p.x_end, 7.0 + 1e-9);
}
