#include <gtest/gtest.h>

#include "asymp/asymp.hpp"

using namespace asymp;

namespace {

Real R(const char* s) { return from_string<Real>(s); }

template <typename A>
void expect_round_trip(const A& a) {
    auto j = to_json(a);
    auto back = std::get<A>(approximant_from_json<Real>(json::parse(j.dump())));
    ASSERT_EQ(back.A.size(), a.A.size());
    for (std::size_t n = 0; n < a.A.size(); ++n) EXPECT_EQ(back.A[n], a.A[n]) << n;
    EXPECT_EQ(back.N, a.N);
    EXPECT_EQ(to_json(back), j);
}

}  // namespace

TEST(Serialize, EveryFamilyRoundTripsBitExact) {
    ScopedPrecision<Real> g(Context{60});
    VirialInput<Real> v;
    v.coeffs = {Real(1), Real(1) / 3, Real(2) / 7};
    v.h = Real(12);
    v.Pc = R("0.3");
    v.rho_c = R("0.9");
    v.delta = R("4.789");
    v.kTc = R("1.1");
    expect_round_trip(build_soft_sphere(v, 3));
    expect_round_trip(build_critical_isotherm(v, 3));
    expect_round_trip(build_offset_reciprocal(BoundaryLayer::Sakiadis, Real(-4) / 9, Real(13) / 8, 11));
    expect_round_trip(build_offset_reciprocal(BoundaryLayer::Blasius, Real(1) / 3, Real(-7) / 4, 20));
    expect_round_trip(build_exp_series(Real(-4) / 9, Real(13) / 8, 15));
    expect_round_trip(build_fp(Real(-12) / 5, 16));
}

TEST(Serialize, RecordsPrecisionAndRejectsUnknownFamily) {
    ScopedPrecision<Real> g(Context{40});
    auto j = to_json(build_fp(R("-2.4"), 4));
    EXPECT_EQ(j["precision"], 40);
    EXPECT_EQ(j["family"], "flierl-petviashvili");
    j["family"] = "nope";
    EXPECT_THROW(approximant_from_json<Real>(j), InvalidArgument);
}

TEST(Serialize, PredictionTable) {
    ParameterPrediction<double> p;
    p.param_names = {"z"};
    p.family = "flierl-petviashvili";
    p.records = {{4, {-1.5}, 0.0, -1, true}, {6, {-2.1}, 0.0, -1, true}, {8, {-2.3}, 0.0, -1, true}};
    assign_branches(p);
    auto j = to_json(p);
    EXPECT_EQ(j["records"].size(), 3u);
    EXPECT_EQ(j["successive_differences"].size(), 2u);
    EXPECT_EQ(j["selected_branch"], 0);
}
