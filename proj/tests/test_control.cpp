#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "deadoil/control.hpp"
#include "deadoil/error.hpp"
#include "deadoil/profiles.hpp"
#include "support/oracles.hpp"

using namespace deadoil;

namespace {

std::vector<double> smooth_trace(std::size_t size, unsigned seed, double amplitude) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const double a = coef(rng), b = coef(rng), c = coef(rng);
    std::vector<double> out(size);
    for (std::size_t n = 0; n < size; ++n) {
        const double t = static_cast<double>(n) / (size - 1);
        out[n] = amplitude * (a + b * std::cos(3.1 * t) + c * std::sin(7.3 * t));
    }
    return out;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST(ReducedGradient, VanishesAtOrigin) {
    const Discretization d(7, 7, 6, 1.0);
    EXPECT_EQ(reduced_gradient(SpaceTimeField(d), SpaceTimeField(d), PenaltyConfig{}).g.max_abs(), 0.0);
}

TEST(ReducedGradient, ConstantControlQuadraticPenalty) {
    const Discretization d(7, 7, 6, 1.0);
    const double beta1 = 0.4, c = 1.3;
    const auto g = reduced_gradient(SpaceTimeField(d, c), SpaceTimeField(d), PenaltyConfig{beta1, 0.7, 1.0}).g;
    for (int n = 0; n <= d.nt(); ++n)
        for (std::size_t k = 0; k < d.nodes(); ++k) EXPECT_NEAR(g[n][k], beta1 * c, 1e-14);
}

TEST(ReducedGradient, MultiplierEntersWithMinusSign) {
    const Discretization d(7, 7, 6, 1.0);
    const SpaceTimeField p1 = smooth_random_field(d, 3);
    const auto g = reduced_gradient(SpaceTimeField(d), p1, PenaltyConfig{}).g;
    EXPECT_EQ((g + p1).max_abs(), 0.0);
}

TEST(PenaltyGradient, IsTheExactDiscreteDerivative) {
    const Discretization d(9, 9, 10, 0.8);
    for (double q0 : {1.0, 1.25, 1.5, 2.0}) {
        const PenaltyConfig pen{0.3, 0.05, q0};
        const SpaceTimeField f = smooth_random_field(d, 5);
        const SpaceTimeField h = smooth_random_field(d, 6);
        const double eps = 1e-6;
        const double fd =
            (evaluate_penalty(f + eps * h, pen).total - evaluate_penalty(f - eps * h, pen).total) / (2 * eps);
        const double exact = inner_qt(penalty_gradient(f, pen), h);
        EXPECT_NEAR(exact, fd, 1e-7 * std::abs(fd)) << "q0 = " << q0;
    }
}

TEST(TimeBvp, ZeroMultiplier) {
    const auto f = solve_optimality_time_bvp(std::vector<double>(9, 0.0), PenaltyConfig{}, 0.1);
    EXPECT_EQ(max_abs(f), 0.0);
}

TEST(TimeBvp, ConstantMultiplierGivesConstantControl) {
    for (double q0 : {1.0, 1.5, 2.0}) {
        for (double c : {0.8, -2.5}) {
            const PenaltyConfig pen{0.7, 0.1, q0};
            const auto f = solve_optimality_time_bvp(std::vector<double>(11, c), pen, 0.05);
            const double expected = std::copysign(std::pow(std::abs(c) / (q0 * pen.beta1), 1.0 / (2 * q0 - 1)), c);
            for (double v : f) EXPECT_NEAR(v, expected, 1e-12 * (1 + std::abs(expected)));
        }
    }
}

TEST(TimeBvp, MatchesDenseNewtonOracle) {
    for (double q0 : {1.0, 1.2, 1.5, 2.5}) {
        for (unsigned seed = 1; seed <= 3; ++seed) {
            const PenaltyConfig pen{0.5, 0.02, q0};
            const double dt = 1.0 / 16;
            const auto p1 = smooth_trace(17, seed, 0.8);
            const auto f = solve_optimality_time_bvp(p1, pen, dt);
            const auto ref = oracle::dense_newton_bvp(p1, pen, dt);
            EXPECT_LE(oracle::bvp_residual_max(f, p1, pen, dt), 1e-10 * (1 + max_abs(p1)));
            for (std::size_t n = 0; n < f.size(); ++n) EXPECT_NEAR(f[n], ref[n], 1e-9 * (1 + max_abs(ref)));
        }
    }
}

TEST(TimeBvp, IsOdd) {
    const PenaltyConfig pen{0.5, 0.02, 1.5};
    const auto p1 = smooth_trace(13, 9, 1.0);
    std::vector<double> neg(p1.size());
    for (std::size_t n = 0; n < p1.size(); ++n) neg[n] = -p1[n];
    const auto a = solve_optimality_time_bvp(p1, pen, 0.1);
    const auto b = solve_optimality_time_bvp(neg, pen, 0.1);
    for (std::size_t n = 0; n < a.size(); ++n) EXPECT_NEAR(a[n], -b[n], 1e-12 * (1 + max_abs(a)));
}

TEST(TimeBvp, SolutionZeroesTheReducedGradient) {
    const Discretization d(7, 7, 12, 0.6);
    const PenaltyConfig pen{0.5, 0.02, 1.5};
    const SpaceTimeField p1 = smooth_random_field(d, 4);
    const SpaceTimeField f = solve_optimality_bvp_field(p1, pen);
    EXPECT_LE(reduced_gradient(f, p1, pen).g.max_abs(), 1e-10 * (1 + p1.max_abs()));
}

TEST(TimeBvp, RejectsBadInput) {
    EXPECT_THROW(solve_optimality_time_bvp(std::vector<double>(2, 0.0), PenaltyConfig{}, 0.1), ConfigError);
    EXPECT_THROW(solve_optimality_time_bvp(std::vector<double>(5, 0.0), PenaltyConfig{}, 0.0), ConfigError);
}

TEST(FdOracle, ZeroDirection) {
    const auto [problem, f] = oracle::default_problem(Discretization(7, 7, 4, 0.5));
    const std::vector<double> eps{1e-2, 1e-3};
    for (const auto& s : fd_gradient_oracle(problem, f, SpaceTimeField(problem.disc), eps)) {
        EXPECT_EQ(s.central_difference, 0.0);
    }
}

TEST(FdOracle, RejectsBadSteps) {
    const auto [problem, f] = oracle::default_problem(Discretization(7, 7, 4, 0.5));
    const SpaceTimeField h(problem.disc);
    EXPECT_THROW(fd_gradient_oracle(problem, f, h, std::vector<double>{1e-2, 1e-2}), ConfigError);
    EXPECT_THROW(fd_gradient_oracle(problem, f, h, std::vector<double>{0.0}), ConfigError);
}

TEST(Gradient, PenaltyOnlyWhenTargetsAreRealized) {
    auto [problem, f] = oracle::default_problem(Discretization(9, 9, 8, 0.5));
    const auto realized = evaluate(problem, f).state;
    problem.U = realized.u;
    problem.P = realized.p;
    const SpaceTimeField h = smooth_random_field(problem.disc, 17);
    const auto rows = gradient_check(problem, f, h, std::vector<double>{1e-5});
    EXPECT_LE(rows.front().rel_error, 1e-7);
}

TEST(Gradient, AgreesWithFiniteDifferencesOnDefaultProblem) {
    const auto [problem, f] = oracle::default_problem(Discretization(9, 9, 8, 0.5));
    const SpaceTimeField h = eval_profile_qt(parse_profile("sinprod(1)*tsin(1)"), problem.disc);
    for (const auto& row : gradient_check(problem, f, h, std::vector<double>{1e-2, 1e-3})) {
        EXPECT_LE(row.rel_error, 0.05) << "eps " << row.eps;
    }
}

TEST(Gradient, QuadraticPenaltyConsistencyUnderRefinement) {
    const auto worst = [](int n, int nt) {
        auto [problem, f] = oracle::default_problem(Discretization(n, n, nt, 0.5));
        problem.pen.q0 = 1.0;
        const SpaceTimeField h = eval_profile_qt(parse_profile("sinprod(1)*tsin(1)"), problem.disc);
        return gradient_check(problem, f, h, std::vector<double>{1e-3}).front().rel_error;
    };
    const double coarse = worst(17, 16);
    const double fine = worst(35, 32);
    EXPECT_LE(coarse, 0.05);
    EXPECT_GE(coarse / fine, 1.5);
}
