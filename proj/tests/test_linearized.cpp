#include <gtest/gtest.h>

#include "deadoil/linearized.hpp"
#include "deadoil/profiles.hpp"
#include "support/oracles.hpp"

using namespace deadoil;

namespace {

struct Bed {
    Discretization d{9, 9, 6, 0.5};
    StateSolution base{smooth_random_field(d, 1), smooth_random_field(d, 2)};
    SpaceTimeField f = smooth_random_field(d, 3);
    CoefficientModel model = oracle::nonlinear_model();
};

}  // namespace

TEST(ApplyDF, ZeroDirection) {
    Bed b;
    const auto r = apply_dF(b.base, b.f, b.model, Direction{SpaceTimeField(b.d), SpaceTimeField(b.d), SpaceTimeField(b.d)});
    EXPECT_EQ(r.res1.max_abs(), 0.0);
    EXPECT_EQ(r.res2.max_abs(), 0.0);
    EXPECT_EQ(r.trace_e.max_abs(), 0.0);
    EXPECT_EQ(r.trace_w.max_abs(), 0.0);
}

TEST(ApplyDF, LinearBaseReducesToHeatOperator) {
    const Discretization d(9, 7, 5, 0.5);
    const StateSolution base{SpaceTimeField(d), SpaceTimeField(d)};
    const SpaceTimeField e = smooth_random_field(d, 4);
    const auto r = apply_dF(base, SpaceTimeField(d), oracle::decoupled_model(),
                            Direction{e, SpaceTimeField(d), SpaceTimeField(d)});
    const auto lap = oracle::div_coeff_grad_matrix(ScalarField(d, 1.0));
    for (int n = 1; n <= d.nt(); ++n) {
        const Eigen::VectorXd en = oracle::to_eigen(e[n]);
        const Eigen::VectorXd expected = (en - oracle::to_eigen(e[n - 1])) / d.dt() - lap * en;
        EXPECT_LT((oracle::to_eigen(r.res1[n]) - expected).lpNorm<Eigen::Infinity>(), 1e-9 * expected.norm());
    }
    EXPECT_EQ(r.res2.max_abs(), 0.0);
    EXPECT_EQ(r.trace_e, e[0]);
}

TEST(ApplyDF, ControlEntersPressureRowWithMinusSign) {
    Bed b;
    const SpaceTimeField h = smooth_random_field(b.d, 5);
    const auto r = apply_dF(b.base, b.f, b.model, Direction{SpaceTimeField(b.d), SpaceTimeField(b.d), h});
    EXPECT_EQ(r.res1.max_abs(), 0.0);
    for (int n = 1; n <= b.d.nt(); ++n) EXPECT_EQ((r.res2[n] + h[n]).max_abs(), 0.0);
}

TEST(ApplyDF, IsLinearInTheDirection) {
    Bed b;
    const Direction d1{smooth_random_field(b.d, 11), smooth_random_field(b.d, 12), smooth_random_field(b.d, 13)};
    const Direction d2{smooth_random_field(b.d, 21), smooth_random_field(b.d, 22), smooth_random_field(b.d, 23)};
    const double alpha = -1.7;
    const Direction mix{alpha * d1.e + d2.e, alpha * d1.w + d2.w, alpha * d1.h + d2.h};
    const auto r1 = apply_dF(b.base, b.f, b.model, d1);
    const auto r2 = apply_dF(b.base, b.f, b.model, d2);
    const auto rm = apply_dF(b.base, b.f, b.model, mix);
    const double scale = r1.res1.max_abs() + r2.res1.max_abs() + r1.res2.max_abs() + r2.res2.max_abs();
    EXPECT_LT((rm.res1 - (alpha * r1.res1 + r2.res1)).max_abs(), 1e-12 * scale);
    EXPECT_LT((rm.res2 - (alpha * r1.res2 + r2.res2)).max_abs(), 1e-12 * scale);
}

TEST(ApplyDF, TaylorRemainderIsSecondOrder) {
    const Discretization d(17, 17, 16, 0.5);
    const auto rem = oracle::taylor_remainders(d, 2024, {1e-1, 5e-2, 2.5e-2});
    for (std::size_t k = 1; k < rem.size(); ++k) {
        const double ratio = rem[k - 1] / rem[k];
        EXPECT_GE(ratio, 3.5);
        EXPECT_LE(ratio, 4.5);
    }
}
