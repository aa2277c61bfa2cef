#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "deadoil/error.hpp"
#include "deadoil/profiles.hpp"

using namespace deadoil;

TEST(Profiles, ZeroIsZero) {
    const Discretization d(17, 17, 4, 1.0);
    EXPECT_EQ(eval_profile(parse_profile("zero()"), d).max_abs(), 0.0);
}

TEST(Profiles, SinprodPeaksAtCentreOfOddGrid) {
    const Discretization d(17, 17, 4, 1.0);
    const ScalarField v = eval_profile(parse_profile("sinprod(1)"), d);
    EXPECT_NEAR(v.at(8, 8), 1.0, 1e-15);
    EXPECT_NEAR(v.max(), 1.0, 1e-15);
}

TEST(Profiles, PolyprodCentreValue) {
    const Discretization d(17, 17, 4, 1.0);
    EXPECT_NEAR(eval_profile(parse_profile("polyprod(1)"), d).at(8, 8), 1.0 / 16.0, 1e-15);
}

TEST(Profiles, BumpHasCompactSupport) {
    const Discretization d(21, 21, 4, 1.0);
    const ScalarField v = eval_profile(parse_profile("bump(2,0.5,0.5,0.2)"), d);
    EXPECT_NEAR(v.at(10, 10), 2.0, 1e-12);
    EXPECT_EQ(v.at(0, 0), 0.0);
    EXPECT_GE(v.min(), 0.0);
}

TEST(Profiles, TimeFactorsScaleFrames) {
    const Discretization d(7, 7, 4, 2.0);
    const SpaceTimeField v = eval_profile_qt(parse_profile("sinprod(1)*tlin(1,0.5)"), d);
    const ScalarField s = eval_profile(parse_profile("sinprod(1)"), d);
    for (int n = 0; n <= d.nt(); ++n) EXPECT_LT((v[n] - (1.0 + 0.5 * d.t(n)) * s).max_abs(), 1e-15);
    const SpaceTimeField w = eval_profile_qt(parse_profile("constant(1)*tsin(1)"), d);
    EXPECT_NEAR(w[2][0], std::sin(std::numbers::pi / 2), 1e-15);
    EXPECT_NEAR(w[4][0], 0.0, 1e-15);
}

TEST(Profiles, ParseErrors) {
    EXPECT_THROW(parse_profile("sinprod"), ConfigError);
    EXPECT_THROW(parse_profile("sinprod(1,2)"), ConfigError);
    EXPECT_THROW(parse_profile("wave(1)"), ConfigError);
    EXPECT_THROW(parse_profile("sinprod(1)*tsin()"), ConfigError);
    EXPECT_THROW(parse_profile("sinprod(x)"), ConfigError);
    EXPECT_THROW(parse_profile("bump(1,0.5,0.5,0)"), ConfigError);
}

TEST(Profiles, TextRoundTrips) {
    const ProfileSpec spec = parse_profile("bump(2,0.4,0.5,0.3)*tlin(1,1)");
    const ProfileSpec again = parse_profile(spec.text());
    EXPECT_EQ(again.text(), spec.text());
}

TEST(Profiles, BoundaryTraces) {
    EXPECT_TRUE(vanishes_on_boundary(parse_profile("sinprod(1)")));
    EXPECT_TRUE(vanishes_on_boundary(parse_profile("constant(0)")));
    EXPECT_FALSE(vanishes_on_boundary(parse_profile("constant(2)")));
}

TEST(Profiles, RandomFieldIsSeeded) {
    const Discretization d(9, 9, 8, 1.0);
    const SpaceTimeField a = smooth_random_field(d, 7);
    EXPECT_EQ(a, smooth_random_field(d, 7));
    EXPECT_NE(a, smooth_random_field(d, 8));
    EXPECT_GT(a.max_abs(), 0.0);
    EXPECT_EQ(eval_profile_qt(parse_profile("random(7)"), d), a);
}
