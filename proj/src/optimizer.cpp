#include "deadoil/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "deadoil/error.hpp"

namespace deadoil {

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::grad_tol: return "grad_tol";
        case StopReason::max_iters: return "max_iters";
        case StopReason::line_search_failure: return "line_search_failure";
        case StopReason::diverged: return "diverged";
    }
    return "?";
}

void GradientDescentOptions::validate() const {
    if (max_iters < 0) throw ConfigError("optimizer: max_iters must be >= 0");
    if (!(grad_tol > 0.0)) throw ConfigError("optimizer: grad_tol must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0)) throw ConfigError("optimizer: armijo_c must lie in (0, 1)");
    if (!(shrink > 0.0 && shrink < 1.0)) throw ConfigError("optimizer: shrink must lie in (0, 1)");
    if (!(step0 > 0.0)) throw ConfigError("optimizer: step0 must be positive");
    if (max_backtracks < 1) throw ConfigError("optimizer: max_backtracks must be >= 1");
}

void FixedPointOptions::validate() const {
    if (max_iters < 0) throw ConfigError("optimizer: max_iters must be >= 0");
    if (!(damping > 0.0 && damping <= 1.0)) throw ConfigError("optimizer: damping must lie in (0, 1]");
    if (!(tol > 0.0)) throw ConfigError("optimizer: tol must be positive");
}

OptimizeResult optimize_gradient_descent(const SpaceTimeField& f0, const Problem& problem,
                                         const GradientDescentOptions& opts) {
    opts.validate();
    OptimizeResult out{f0, {}};
    out.report.method = "gradient_descent";

    GradientEvaluation ge = evaluate_gradient(problem, out.f);
    double grad_norm = lp_norm_qt(ge.gradient.g, 2.0);
    const double threshold = opts.grad_tol * (1.0 + grad_norm);
    out.report.iterations.push_back({0, ge.cost, grad_norm, 0.0, grad_norm});

    for (int iter = 1;; ++iter) {
        if (grad_norm <= threshold) {
            out.report.converged = true;
            out.report.reason = StopReason::grad_tol;
            return out;
        }
        if (iter > opts.max_iters) {
            out.report.reason = StopReason::max_iters;
            return out;
        }

        const double slope = grad_norm * grad_norm;
        double alpha = opts.step0;
        bool accepted = false;
        SpaceTimeField trial = out.f;
        for (int k = 0; k < opts.max_backtracks; ++k) {
            trial = out.f;
            trial.axpy(-alpha, ge.gradient.g);
            const double j_trial = evaluate(problem, trial).cost.total;
            if (j_trial <= ge.cost.total - opts.armijo_c * alpha * slope) {
                accepted = true;
                break;
            }
            alpha *= opts.shrink;
        }
        if (!accepted) {
            out.report.reason = StopReason::line_search_failure;
            return out;
        }

        out.f = std::move(trial);
        ge = evaluate_gradient(problem, out.f);
        grad_norm = lp_norm_qt(ge.gradient.g, 2.0);
        out.report.iterations.push_back({iter, ge.cost, grad_norm, alpha, grad_norm});
    }
}

OptimizeResult optimize_fixed_point(const SpaceTimeField& f0, const Problem& problem, const FixedPointOptions& opts) {
    opts.validate();
    OptimizeResult out{f0, {}};
    out.report.method = "fixed_point";
    double min_residual = std::numeric_limits<double>::infinity();

    for (int iter = 0;; ++iter) {
        const GradientEvaluation ge = evaluate_gradient(problem, out.f);
        const double residual = lp_norm_qt(ge.gradient.g, 2.0);
        const double p1_norm = lp_norm_qt(ge.adjoint.p1, 2.0);
        out.report.iterations.push_back({iter, ge.cost, residual, iter == 0 ? 0.0 : opts.damping, residual});

        if (residual <= opts.tol * (1.0 + p1_norm)) {
            out.report.converged = true;
            out.report.reason = StopReason::grad_tol;
            return out;
        }
        min_residual = std::min(min_residual, residual);
        if (residual > 10.0 * min_residual) {
            out.report.reason = StopReason::diverged;
            return out;
        }
        if (iter >= opts.max_iters) {
            out.report.reason = StopReason::max_iters;
            return out;
        }

        const SpaceTimeField target = solve_optimality_bvp_field(ge.adjoint.p1, problem.pen);
        out.f *= 1.0 - opts.damping;
        out.f.axpy(opts.damping, target);
    }
}

double check_optimality(const SpaceTimeField& f, const Problem& problem) {
    return lp_norm_qt(evaluate_gradient(problem, f).gradient.g, 2.0);
}

}  // namespace deadoil
