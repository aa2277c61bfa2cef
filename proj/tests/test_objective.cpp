#include <gtest/gtest.h>

#include "deadoil/error.hpp"
#include "deadoil/objective.hpp"
#include "deadoil/profiles.hpp"

using namespace deadoil;

TEST(PenaltyConfig, RejectsOutOfRange) {
    EXPECT_THROW((PenaltyConfig{0.0, 1.0, 1.0}.validate()), ConfigError);
    EXPECT_THROW((PenaltyConfig{1.0, -1.0, 1.0}.validate()), ConfigError);
    EXPECT_THROW((PenaltyConfig{1.0, 1.0, 0.9}.validate()), ConfigError);
    EXPECT_NO_THROW((PenaltyConfig{1.0, 1.0, 1.0}.validate()));
}

TEST(Cost, MatchingTargetsAndZeroControl) {
    const Discretization d(9, 9, 4, 1.0);
    const StateSolution s{smooth_random_field(d, 1), smooth_random_field(d, 2)};
    const auto c = evaluate_cost(s, SpaceTimeField(d), s.u, s.p, PenaltyConfig{});
    EXPECT_EQ(c.total, 0.0);
    EXPECT_EQ(c.misfit_u, 0.0);
    EXPECT_EQ(c.penalty_dtf, 0.0);
}

TEST(Cost, UnitSaturationMisfit) {
    const Discretization d(31, 31, 8, 1.0);
    const StateSolution s{SpaceTimeField(d, 1.0), SpaceTimeField(d)};
    const auto c = evaluate_cost(s, SpaceTimeField(d), SpaceTimeField(d), SpaceTimeField(d), PenaltyConfig{});
    EXPECT_NEAR(c.misfit_u, 0.5 * d.interior_volume(), 1e-13);
    EXPECT_NEAR(c.misfit_u, 0.5, 0.04);
    EXPECT_EQ(c.misfit_p, 0.0);
}

TEST(Cost, ConstantControlPenalty) {
    const Discretization d(31, 31, 8, 1.0);
    const double c = 0.7;
    const auto b = evaluate_penalty(SpaceTimeField(d, c), PenaltyConfig{2.0, 1.0, 1.0});
    EXPECT_NEAR(b.penalty_f, c * c * d.interior_volume(), 1e-13);
    EXPECT_NEAR(b.penalty_f, c * c, 0.04);
    EXPECT_EQ(b.penalty_dtf, 0.0);
}

TEST(Cost, TotalIsSumOfTerms) {
    const Discretization d(7, 7, 6, 0.5);
    const StateSolution s{smooth_random_field(d, 1), smooth_random_field(d, 2)};
    const auto c = evaluate_cost(s, smooth_random_field(d, 3), smooth_random_field(d, 4), smooth_random_field(d, 5),
                                 PenaltyConfig{0.3, 0.2, 1.5});
    EXPECT_NEAR(c.total, c.misfit_u + c.misfit_p + c.penalty_f + c.penalty_dtf, 1e-15);
    EXPECT_GT(c.penalty_dtf, 0.0);
}

TEST(Cost, RejectsMismatchedTargets) {
    const Discretization d(7, 7, 6, 0.5), e(7, 7, 4, 0.5);
    const StateSolution s{SpaceTimeField(d), SpaceTimeField(d)};
    EXPECT_THROW(evaluate_cost(s, SpaceTimeField(d), SpaceTimeField(e), SpaceTimeField(d), PenaltyConfig{}),
                 ConfigError);
}

TEST(Cost, PenaltyScaling) {
    const Discretization d(7, 7, 6, 0.5);
    const SpaceTimeField f = smooth_random_field(d, 8);
    const auto a = evaluate_penalty(f, PenaltyConfig{0.3, 0.1, 1.5});
    const auto b = evaluate_penalty(f, PenaltyConfig{0.6, 0.1, 1.5});
    EXPECT_DOUBLE_EQ(b.penalty_f, 2.0 * a.penalty_f);
    const auto q1 = evaluate_penalty(f, PenaltyConfig{0.3, 0.1, 1.0});
    const auto q2 = evaluate_penalty(2.0 * f, PenaltyConfig{0.3, 0.1, 1.0});
    EXPECT_NEAR(q2.penalty_f / q1.penalty_f, 4.0, 1e-14);
    EXPECT_GE(a.total, 0.0);
}
