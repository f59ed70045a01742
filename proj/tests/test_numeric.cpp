#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "asymp/asymp.hpp"

using namespace asymp;

namespace {

Real R(const char* s) { return from_string<Real>(s); }

bool near(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace

TEST(Scalar, ScopedPrecisionRestores) {
    const auto before = Real::default_precision();
    {
        ScopedPrecision<Real> g(Context{80});
        EXPECT_EQ(Real::default_precision(), 80u);
        {
            ScopedPrecision<Real> inner(Context{30});
            EXPECT_EQ(Real::default_precision(), 30u);
        }
        EXPECT_EQ(Real::default_precision(), 80u);
    }
    EXPECT_EQ(Real::default_precision(), before);
}

TEST(Scalar, RejectsLowPrecision) {
    EXPECT_THROW(check_context(Context{10}), InvalidArgument);
    EXPECT_NO_THROW(check_context(Context::fast()));
}

TEST(Scalar, StringRoundTrip) {
    ScopedPrecision<Real> g(Context{60});
    Real x = Real(1) / 3;
    EXPECT_EQ(from_string<Real>(to_string(x)), x);
    EXPECT_EQ(from_string<double>(to_string(0.1)), 0.1);
    EXPECT_EQ(to_string(R("2.5"), 3), "2.50e+00");
}

TEST(Jet, ProductAndChainRules) {
    ScopedPrecision<Real> g(Context{40});
    auto x = Jet2<Real>::variable(R("0.7"));
    auto f = x * x * x;
    EXPECT_TRUE(near(f.d1, 3 * R("0.49"), precision_tol<Real>(2)));
    EXPECT_TRUE(near(f.d2, 6 * R("0.7"), precision_tol<Real>(2)));
    Jet2<Real> c(R("3"));
    EXPECT_EQ(c.d1, 0);
    EXPECT_EQ(c.d2, 0);
    auto e = exp(Real(-2) * x);
    Real ev = exp(R("-1.4"));
    EXPECT_TRUE(near(e.d1, -2 * ev, precision_tol<Real>(2)));
    EXPECT_TRUE(near(e.d2, 4 * ev, precision_tol<Real>(2)));
}

TEST(Jet, QuotientLogSqrtPow) {
    ScopedPrecision<Real> g(Context{40});
    const Real x0 = R("1.3");
    auto x = Jet2<Real>::variable(x0);
    auto q = Real(1) / x;
    EXPECT_TRUE(near(q.d2, 2 / (x0 * x0 * x0), precision_tol<Real>(2)));
    auto l = log(x);
    EXPECT_TRUE(near(l.d2, -1 / (x0 * x0), precision_tol<Real>(2)));
    auto s = sqrt(x);
    EXPECT_TRUE(near(s.d1, 1 / (2 * sqrt(x0)), precision_tol<Real>(2)));
    auto p = pow(x, R("2.5"));
    EXPECT_TRUE(near(p.d2, R("3.75") * sqrt(x0), precision_tol<Real>(2)));
}

TEST(Complex, DivisionAndModulus) {
    Complex<double> a{3, 4}, b{1, -2};
    auto q = a / b;
    auto back = q * b;
    EXPECT_NEAR(back.re, 3, 1e-14);
    EXPECT_NEAR(back.im, 4, 1e-14);
    EXPECT_DOUBLE_EQ(abs(a), 5);
}

TEST(Polynomial, TrimDegreeAndEval) {
    UnivariatePolynomial<double> p(std::vector<double>{1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_DOUBLE_EQ(p(3.0), 7);
    auto d = (p * p).derivative();
    EXPECT_DOUBLE_EQ(d(1.0), 12);
    int k = 0;
    auto z = UnivariatePolynomial<double>(std::vector<double>{0, 0, 5, 1}).deflate_zero_roots(&k);
    EXPECT_EQ(k, 2);
    EXPECT_EQ(z.degree(), 1);
}

TEST(Polynomial, RootsOfSimpleCases) {
    ScopedPrecision<Real> g(Context{40});
    auto r = poly_roots(UnivariatePolynomial<Real>(std::vector<Real>{-1, 0, 1}), precision_tol<Real>(10));
    ASSERT_EQ(r.size(), 2u);
    std::vector<Real> re{r[0].re, r[1].re};
    std::sort(re.begin(), re.end());
    EXPECT_TRUE(near(re[0], -1, precision_tol<Real>(10)));
    EXPECT_TRUE(near(re[1], 1, precision_tol<Real>(10)));

    auto d = poly_roots(UnivariatePolynomial<Real>(std::vector<Real>{1, 2, 1}), precision_tol<Real>(10));
    ASSERT_EQ(d.size(), 2u);
    for (const auto& x : d) EXPECT_LT(abs(x + Complex<Real>{1, 0}), R("1e-15"));

    auto c = poly_roots(UnivariatePolynomial<Real>(std::vector<Real>{1, 0, 1}), precision_tol<Real>(10));
    for (const auto& x : c) {
        EXPECT_TRUE(near(abs(x.re), 0, precision_tol<Real>(10)));
        EXPECT_TRUE(near(abs(x.im), 1, precision_tol<Real>(10)));
    }
}

TEST(Polynomial, WilkinsonDegreeTwenty) {
    ScopedPrecision<Real> g(Context{60});
    UnivariatePolynomial<Real> p(std::vector<Real>{1});
    for (int k = 1; k <= 20; ++k) p = p * UnivariatePolynomial<Real>(std::vector<Real>{Real(-k), Real(1)});
    auto roots = poly_roots(p, precision_tol<Real>(10));
    ASSERT_EQ(roots.size(), 20u);
    std::vector<Real> re;
    for (const auto& r : roots) {
        EXPECT_LT(abs(r.im), R("1e-30"));
        re.push_back(r.re);
    }
    std::sort(re.begin(), re.end());
    for (int k = 1; k <= 20; ++k) EXPECT_LT(abs(re[k - 1] - k), R("1e-30")) << k;

    // re-expanding prod (x - r_i) reproduces the coefficients
    UnivariatePolynomial<Real> q(std::vector<Real>{1});
    for (const auto& r : re) q = q * UnivariatePolynomial<Real>(std::vector<Real>{-r, Real(1)});
    for (int k = 0; k <= 20; ++k)
        EXPECT_LE(abs(q[k] - p[k]), R("1e-20") * (1 + abs(p[k])));
}

TEST(Polynomial, ConstantHasNoRoots) {
    EXPECT_THROW(poly_roots(UnivariatePolynomial<double>(std::vector<double>{2}), 1e-10), InvalidArgument);
}

TEST(Vandermonde, HandCases) {
    ScopedPrecision<Real> g(Context{40});
    auto a = vandermonde_solve(std::vector<Real>{1}, std::vector<Real>{R("-1.5")});
    EXPECT_EQ(a[0], R("-1.5"));
    auto b = vandermonde_solve(std::vector<Real>{1, 2}, std::vector<Real>{R("3"), R("5")});
    EXPECT_TRUE(near(b[0], 2 * 3 - 5, precision_tol<Real>(2)));
    EXPECT_TRUE(near(b[1], 5 - 3, precision_tol<Real>(2)));
}

TEST(Vandermonde, RoundTripAtSixtyDigits) {
    ScopedPrecision<Real> g(Context{60});
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<Real> nodes, A;
    for (int k = 1; k <= 10; ++k) {
        nodes.push_back(Real(k));
        A.push_back(Real(u(rng)));
    }
    auto b = vandermonde_multiply(nodes, A);
    auto back = vandermonde_solve(nodes, b);
    for (int k = 0; k < 10; ++k) EXPECT_LE(abs(back[k] - A[k]), R("1e-40") * (1 + abs(A[k])));
}

TEST(Vandermonde, DegenerateNodes) {
    EXPECT_THROW(vandermonde_solve(std::vector<double>{1, 2, 1}, std::vector<double>{1, 1, 1}), DegenerateNodes);
}

TEST(Newton, LinearAndCircle) {
    ScopedPrecision<Real> g(Context{40});
    auto lin = newton_2d<Real>([]<class X>(const X& x, const X& y) -> std::array<X, 2> { return {x - X(1), y - X(2)}; }, {Real(0), Real(0)},
                               precision_tol<Real>(5));
    EXPECT_TRUE(near(lin.x, 1, precision_tol<Real>(5)));
    EXPECT_TRUE(near(lin.y, 2, precision_tol<Real>(5)));

    auto circ = newton_2d<Real>([]<class X>(const X& x, const X& y) -> std::array<X, 2> { return {x * x + y * y - X(1), x - y}; },
                                {Real(1), Real(0)}, precision_tol<Real>(5));
    EXPECT_TRUE(near(circ.x, sqrt(Real(2)) / 2, precision_tol<Real>(5)));
    EXPECT_TRUE(near(circ.y, sqrt(Real(2)) / 2, precision_tol<Real>(5)));
    EXPECT_LE(circ.residual, precision_tol<Real>(5));
}

TEST(Newton, FiniteDifferenceFallback) {
    // plain-double lambda that cannot be lifted to jets
    auto f = [](const double& x, const double& y) { return std::array<double, 2>{std::exp(x) - 2, y * y - 9}; };
    auto r = newton_2d<double>(f, {0.5, 2.0}, 1e-12);
    EXPECT_NEAR(r.x, std::log(2.0), 1e-12);
    EXPECT_NEAR(r.y, 3, 1e-12);
}

TEST(Newton, SingularJacobian) {
    auto f = []<class X>(const X& x, const X& y) -> std::array<X, 2> { return {x + y - X(1), X(2) * x + X(2) * y - X(3)}; };
    EXPECT_THROW(newton_2d<double>(f, {0.0, 0.0}, 1e-12), SingularJacobian);
}

TEST(Newton, NonConvergence) {
    auto f = []<class X>(const X& x, const X& y) -> std::array<X, 2> { return {x * x + X(1), y}; };
    EXPECT_THROW(newton_2d<double>(f, {0.3, 0.0}, 1e-12, 15), Error);
}

TEST(LinearFit, ExactAndConstant) {
    auto a = linear_fit(std::vector<double>{1, 2}, std::vector<double>{2, 4});
    EXPECT_NEAR(a.slope, 2, 1e-15);
    EXPECT_NEAR(a.intercept, 0, 1e-15);
    EXPECT_NEAR(a.residual, 0, 1e-15);
    auto c = linear_fit(std::vector<double>{0, 1, 2}, std::vector<double>{1, 1, 1});
    EXPECT_NEAR(c.slope, 0, 1e-15);
    EXPECT_NEAR(c.intercept, 1, 1e-15);
    EXPECT_THROW(linear_fit(std::vector<double>{1}, std::vector<double>{1}), InsufficientPoints);
}

TEST(Determinism, RepeatedRootsAreBitIdentical) {
    ScopedPrecision<Real> g(Context{50});
    UnivariatePolynomial<Real> p(std::vector<Real>{R("0.3"), R("-1.1"), R("0.7"), R("2.2"), R("1")});
    auto a = poly_roots(p, precision_tol<Real>(10));
    auto b = poly_roots(p, precision_tol<Real>(10));
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].re, b[k].re);
        EXPECT_EQ(a[k].im, b[k].im);
    }
}
