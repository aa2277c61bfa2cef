#pragma once

#include <string>
#include <vector>

#include "deadoil/control.hpp"

namespace deadoil {

enum class StopReason { grad_tol, max_iters, line_search_failure, diverged };

const char* to_string(StopReason reason);

struct IterationRecord {
    int iter = 0;
    CostBreakdown cost;
    double grad_norm = 0.0;
    double step = 0.0;  // accepted step (descent) or damping (fixed point); 0 at iteration 0
    double optimality_residual = 0.0;
};

struct OptimizeReport {
    std::string method;
    std::vector<IterationRecord> iterations;
    bool converged = false;
    StopReason reason = StopReason::max_iters;
};

struct OptimizeResult {
    SpaceTimeField f;
    OptimizeReport report;
};

struct GradientDescentOptions {
    int max_iters = 200;
    double grad_tol = 1e-6;
    double armijo_c = 1e-4;
    double shrink = 0.5;
    double step0 = 1.0;
    int max_backtracks = 40;

    void validate() const;
};

/// Steepest descent on J with Armijo backtracking:
/// accept f - a G once J(f - a G) <= J(f) - c a ||G||^2, a = step0 * shrink^k.
/// Stops when ||G|| <= grad_tol (1 + ||G_0||).
OptimizeResult optimize_gradient_descent(const SpaceTimeField& f0, const Problem& problem,
                                         const GradientDescentOptions& opts = {});

struct FixedPointOptions {
    int max_iters = 200;
    double damping = 0.5;
    double tol = 1e-6;

    void validate() const;
};

/// f <- (1 - theta) f + theta * solve_optimality_bvp_field(p1(f)) until the
/// optimality residual is at most tol (1 + ||p1(f)||). Aborts with reason
/// `diverged` once the residual exceeds ten times its running minimum.
OptimizeResult optimize_fixed_point(const SpaceTimeField& f0, const Problem& problem,
                                    const FixedPointOptions& opts = {});

/// L2(Q_T) norm of the optimality-system residual at f, i.e. ||G(f)||.
double check_optimality(const SpaceTimeField& f, const Problem& problem);

}  // namespace deadoil
