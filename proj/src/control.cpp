#include "deadoil/control.hpp"

#include <algorithm>
#include <cmath>

#include "deadoil/error.hpp"

namespace deadoil {

namespace {

// Floor inside |f|^{2q0-2} of the Newton Jacobian only.
constexpr double kJacobianFloor = 1e-12;
constexpr int kNewtonMaxIterations = 50;

double power_term(double f, double q0) {
    return q0 == 1.0 ? f : std::pow(std::abs(f), 2.0 * q0 - 2.0) * f;
}

// Residual of the time BVP at one node: -beta2 D_tt f + q0 beta1 |f|^{2q0-2} f - p1.
void bvp_residual(std::span<const double> f, std::span<const double> p1, const PenaltyConfig& pen, double dt,
                  std::span<double> out) {
    const std::size_t last = f.size() - 1;
    const double c = pen.beta2 / (dt * dt);
    for (std::size_t n = 0; n <= last; ++n) {
        const double prev = n == 0 ? f[1] : f[n - 1];
        const double next = n == last ? f[last - 1] : f[n + 1];
        out[n] = -c * (next - 2.0 * f[n] + prev) + pen.q0 * pen.beta1 * power_term(f[n], pen.q0) - p1[n];
    }
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

void check_consistency(const Problem& problem) {
    require_same_grid(problem.disc, problem.u0.disc(), "problem u0");
    require_same_grid(problem.disc, problem.p0.disc(), "problem p0");
    require_same_grid(problem.disc, problem.U.disc(), "problem U");
    require_same_grid(problem.disc, problem.P.disc(), "problem P");
    problem.pen.validate();
}

Evaluation evaluate(const Problem& problem, const SpaceTimeField& f) {
    require_same_grid(problem.disc, f.disc(), "evaluate");
    StateSolution state = solve_forward(problem.model, problem.u0, problem.p0, f);
    CostBreakdown cost = evaluate_cost(state, f, problem.U, problem.P, problem.pen);
    return {std::move(state), cost};
}

GradientEvaluation evaluate_gradient(const Problem& problem, const SpaceTimeField& f) {
    auto [state, cost] = evaluate(problem, f);
    AdjointSolution adjoint = solve_adjoint(state, problem.U, problem.P, problem.model);
    GradientField gradient = reduced_gradient(f, adjoint.p1, problem.pen);
    return {std::move(state), cost, std::move(adjoint), std::move(gradient)};
}

SpaceTimeField second_time_difference(const SpaceTimeField& f) {
    const Discretization& disc = f.disc();
    const int nt = disc.nt();
    const double inv_dt2 = 1.0 / (disc.dt() * disc.dt());
    SpaceTimeField out(disc);
    for (int n = 0; n <= nt; ++n) {
        const ScalarField& prev = f[n == 0 ? 1 : n - 1];
        const ScalarField& next = f[n == nt ? nt - 1 : n + 1];
        for (std::size_t k = 0; k < disc.nodes(); ++k) {
            out[n][k] = (next[k] - 2.0 * f[n][k] + prev[k]) * inv_dt2;
        }
    }
    return out;
}

SpaceTimeField penalty_gradient(const SpaceTimeField& f, const PenaltyConfig& pen) {
    pen.validate();
    SpaceTimeField g = second_time_difference(f);
    g *= -pen.beta2;
    for (int n = 0; n < f.levels(); ++n) {
        for (std::size_t k = 0; k < f.disc().nodes(); ++k) g[n][k] += pen.q0 * pen.beta1 * power_term(f[n][k], pen.q0);
    }
    return g;
}

GradientField reduced_gradient(const SpaceTimeField& f, const SpaceTimeField& p1, const PenaltyConfig& pen) {
    require_same_grid(f.disc(), p1.disc(), "reduced_gradient");
    SpaceTimeField g = penalty_gradient(f, pen);
    g -= p1;
    return {std::move(g)};
}

std::vector<double> solve_optimality_time_bvp(std::span<const double> p1, const PenaltyConfig& pen, double dt) {
    pen.validate();
    if (p1.size() < 3) throw ConfigError("solve_optimality_time_bvp: need at least 3 time levels");
    if (!(dt > 0.0)) throw ConfigError("solve_optimality_time_bvp: dt must be positive");
    const std::size_t size = p1.size();
    const std::size_t last = size - 1;
    const double c = pen.beta2 / (dt * dt);
    const double scale = 1e-10 * (1.0 + max_abs(p1));

    // Start from the pointwise solution that ignores the time coupling.
    std::vector<double> f(size);
    for (std::size_t n = 0; n < size; ++n) {
        f[n] = std::copysign(std::pow(std::abs(p1[n]) / (pen.q0 * pen.beta1), 1.0 / (2.0 * pen.q0 - 1.0)), p1[n]);
    }

    std::vector<double> r(size), trial(size), trial_r(size), step(size);
    std::vector<double> lower(size), diag(size), upper(size);
    bvp_residual(f, p1, pen, dt, r);
    double res = max_abs(r);

    for (int it = 0; res > scale; ++it) {
        if (it >= kNewtonMaxIterations) {
            throw SolverError("time boundary-value Newton did not converge: max residual " + std::to_string(res), res);
        }
        for (std::size_t n = 0; n < size; ++n) {
            diag[n] = 2.0 * c + pen.q0 * pen.beta1 * (2.0 * pen.q0 - 1.0) *
                                    std::pow(std::abs(f[n]) + kJacobianFloor, 2.0 * pen.q0 - 2.0);
            lower[n] = -c;
            upper[n] = -c;
        }
        upper[0] = -2.0 * c;
        lower[last] = -2.0 * c;

        // Thomas algorithm on J step = -r.
        std::vector<double> cp(size), dp(size);
        cp[0] = upper[0] / diag[0];
        dp[0] = -r[0] / diag[0];
        for (std::size_t n = 1; n < size; ++n) {
            const double m = diag[n] - lower[n] * cp[n - 1];
            cp[n] = n < last ? upper[n] / m : 0.0;
            dp[n] = (-r[n] - lower[n] * dp[n - 1]) / m;
        }
        step[last] = dp[last];
        for (std::size_t n = last; n-- > 0;) step[n] = dp[n] - cp[n] * step[n + 1];

        double alpha = 1.0;
        double trial_res = 0.0;
        for (int halving = 0; halving < 40; ++halving) {
            for (std::size_t n = 0; n < size; ++n) trial[n] = f[n] + alpha * step[n];
            bvp_residual(trial, p1, pen, dt, trial_r);
            trial_res = max_abs(trial_r);
            if (trial_res < res) break;
            alpha *= 0.5;
        }
        if (!(trial_res < res)) {
            throw SolverError("time boundary-value Newton stalled: max residual " + std::to_string(res), res);
        }
        f.swap(trial);
        r.swap(trial_r);
        res = trial_res;
    }
    return f;
}

SpaceTimeField solve_optimality_bvp_field(const SpaceTimeField& p1, const PenaltyConfig& pen) {
    const Discretization& disc = p1.disc();
    SpaceTimeField f(disc);
    std::vector<double> trace(disc.nt() + 1);
    for (std::size_t k = 0; k < disc.nodes(); ++k) {
        for (int n = 0; n <= disc.nt(); ++n) trace[n] = p1[n][k];
        const auto sol = solve_optimality_time_bvp(trace, pen, disc.dt());
        for (int n = 0; n <= disc.nt(); ++n) f[n][k] = sol[n];
    }
    return f;
}

std::vector<FdSample> fd_gradient_oracle(const Problem& problem, const SpaceTimeField& f, const SpaceTimeField& h,
                                         std::span<const double> eps_list) {
    require_same_grid(f.disc(), h.disc(), "fd_gradient_oracle");
    std::vector<FdSample> out;
    for (double eps : eps_list) {
        if (!(eps > 0.0)) throw ConfigError("fd_gradient_oracle: eps must be positive");
        if (std::count(eps_list.begin(), eps_list.end(), eps) > 1) {
            throw ConfigError("fd_gradient_oracle: eps values must be distinct");
        }
        SpaceTimeField plus = f;
        plus.axpy(eps, h);
        SpaceTimeField minus = f;
        minus.axpy(-eps, h);
        const double jp = evaluate(problem, plus).cost.total;
        const double jm = evaluate(problem, minus).cost.total;
        out.push_back({eps, (jp - jm) / (2.0 * eps)});
    }
    return out;
}

std::vector<GradcheckRow> gradient_check(const Problem& problem, const SpaceTimeField& f, const SpaceTimeField& h,
                                         std::span<const double> eps_list) {
    const GradientEvaluation ge = evaluate_gradient(problem, f);
    const double adjoint_value = inner_qt(ge.gradient.g, h);
    std::vector<GradcheckRow> rows;
    for (const auto& s : fd_gradient_oracle(problem, f, h, eps_list)) {
        const double gap = std::abs(adjoint_value - s.central_difference);
        const double denom = s.central_difference != 0.0 ? std::abs(s.central_difference) : 1.0;
        rows.push_back({s.eps, s.central_difference, adjoint_value, gap / denom});
    }
    return rows;
}

}  // namespace deadoil
