#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "deadoil/error.hpp"
#include "deadoil/linear_solver.hpp"
#include "deadoil/profiles.hpp"
#include "support/oracles.hpp"

using namespace deadoil;

namespace {

ScalarField positive_random(const Discretization& d, std::uint64_t seed) {
    ScalarField c = smooth_random_field(d, seed)[0];
    for (double& v : c.values()) v = 1.2 + std::sin(v);
    return c;
}

}  // namespace

TEST(ConjugateGradient, MatchesSparseDirectSolve) {
    const Discretization d(13, 11, 4, 1.0);
    const ScalarField c = positive_random(d, 1);
    const ScalarField rhs = smooth_random_field(d, 2)[3];
    const double dt = 0.05;
    const ScalarField x = solve_shifted_diffusion(c, dt, rhs);
    const ScalarField ref = oracle::shifted_solve(c, dt, rhs);
    EXPECT_LT((x - ref).max_abs(), 1e-8 * ref.max_abs());
}

TEST(ConjugateGradient, ZeroRightHandSide) {
    const Discretization d(5, 5, 4, 1.0);
    const ScalarField x = solve_shifted_diffusion(ScalarField(d, 1.0), 0.1, ScalarField(d));
    EXPECT_EQ(x.max_abs(), 0.0);
}

TEST(ConjugateGradient, ReportsNonConvergence) {
    const Discretization d(15, 15, 4, 1.0);
    const ShiftedDiffusion op(positive_random(d, 3), 10.0);
    const ScalarField rhs = smooth_random_field(d, 4)[1];
    ScalarField x(d);
    try {
        conjugate_gradient(op, rhs.values(), x.values(), CgSettings{1e-14, 2});
        FAIL() << "expected SolverError";
    } catch (const SolverError& e) {
        EXPECT_GT(e.residual(), 1e-14);
    }
}

TEST(ConjugateGradient, OperatorDiagonal) {
    const Discretization d(5, 5, 4, 1.0);
    const ShiftedDiffusion op(ScalarField(d, 1.0), 0.5);
    const double h2 = d.hx() * d.hx();
    for (double v : op.diagonal()) EXPECT_NEAR(v, 2.0 + 4.0 / h2, 1e-12);
}

TEST(ConjugateGradient, RejectsNonFiniteRightHandSide) {
    const Discretization d(5, 5, 4, 1.0);
    ScalarField rhs(d, 1.0);
    rhs[3] = std::numeric_limits<double>::infinity();
    EXPECT_THROW(solve_shifted_diffusion(ScalarField(d, 1.0), 0.1, rhs), SolverError);
    rhs[3] = std::nan("");
    EXPECT_THROW(solve_shifted_diffusion(ScalarField(d, 1.0), 0.1, rhs), SolverError);
}
