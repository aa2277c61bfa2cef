#include "deadoil/adjoint.hpp"

#include "deadoil/error.hpp"
#include "deadoil/linear_solver.hpp"

namespace deadoil {

namespace {

// d'(u) grad p . grad p1 + phi''(u) grad u . grad e1 + g'(u) grad p . grad e1
ScalarField first_order_terms(const ScalarField& e1, const ScalarField& p1, const AdjointLevelData& level,
                              const CoefficientModel& model) {
    ScalarField out = hadamard(model.map(Coefficient::d, 1, level.u), grad_dot(level.p, p1));
    out += hadamard(model.map(Coefficient::phi, 2, level.u), grad_dot(level.u, e1));
    out += hadamard(model.map(Coefficient::g, 1, level.u), grad_dot(level.p, e1));
    return out;
}

}  // namespace

AdjointStep step_adjoint(const ScalarField& e1_next, const ScalarField& p1_next, const AdjointLevelData& level,
                         const CoefficientModel& model, double dt) {
    require_same_grid(e1_next.disc(), p1_next.disc(), "step_adjoint");
    require_same_grid(e1_next.disc(), level.u.disc(), "step_adjoint");
    if (!(dt > 0.0)) throw ConfigError("step_adjoint: dt must be positive");
    const double inv_dt = 1.0 / dt;

    // (1/dt - div(phi' grad)) e1_n = e1_{n+1}/dt - X(e1_{n+1}, p1_{n+1}) - (u - U)
    ScalarField e1_rhs = inv_dt * e1_next;
    e1_rhs -= first_order_terms(e1_next, p1_next, level, model);
    e1_rhs -= level.u - level.U;
    ScalarField e1 = solve_shifted_diffusion(model.map(Coefficient::phi, 1, level.u), dt, e1_rhs);

    // (1/dt - div(d grad)) p1_n = p1_{n+1}/dt + div(g grad e1_n) - (p - P)
    ScalarField p1_rhs = inv_dt * p1_next;
    p1_rhs += div_coeff_grad(model.map(Coefficient::g, 0, level.u), e1);
    p1_rhs -= level.p - level.P;
    ScalarField p1 = solve_shifted_diffusion(model.map(Coefficient::d, 0, level.u), dt, p1_rhs);

    return {std::move(e1), std::move(p1)};
}

AdjointSolution solve_adjoint(const StateSolution& state, const SpaceTimeField& U, const SpaceTimeField& P,
                              const CoefficientModel& model) {
    const Discretization& disc = state.u.disc();
    require_same_grid(disc, state.p.disc(), "solve_adjoint");
    require_same_grid(disc, U.disc(), "solve_adjoint");
    require_same_grid(disc, P.disc(), "solve_adjoint");

    AdjointSolution adj{SpaceTimeField(disc), SpaceTimeField(disc)};
    for (int n = disc.nt() - 1; n >= 0; --n) {
        try {
            auto step = step_adjoint(adj.e1[n + 1], adj.p1[n + 1], {state.u[n], state.p[n], U[n], P[n]}, model,
                                     disc.dt());
            adj.e1[n] = std::move(step.e1);
            adj.p1[n] = std::move(step.p1);
        } catch (const SolverError& e) {
            throw SolverError(std::string("adjoint step to level ") + std::to_string(n) + ": " + e.what(),
                              e.residual(), n);
        }
    }
    return adj;
}

AdjointResidual adjoint_residual(const AdjointSolution& adj, const StateSolution& state, const SpaceTimeField& U,
                                 const SpaceTimeField& P, const CoefficientModel& model) {
    const Discretization& disc = state.u.disc();
    require_same_grid(disc, adj.e1.disc(), "adjoint_residual");
    require_same_grid(disc, adj.p1.disc(), "adjoint_residual");
    require_same_grid(disc, U.disc(), "adjoint_residual");
    require_same_grid(disc, P.disc(), "adjoint_residual");
    const double inv_dt = 1.0 / disc.dt();
    const int nt = disc.nt();

    AdjointResidual res{SpaceTimeField(disc), SpaceTimeField(disc)};
    res.ra[nt] = adj.e1[nt];
    res.rb[nt] = adj.p1[nt];
    for (int n = 0; n < nt; ++n) {
        const AdjointLevelData level{state.u[n], state.p[n], U[n], P[n]};

        ScalarField ra = inv_dt * (adj.e1[n + 1] - adj.e1[n]);
        ra += div_coeff_grad(model.map(Coefficient::phi, 1, level.u), adj.e1[n]);
        ra -= first_order_terms(adj.e1[n + 1], adj.p1[n + 1], level, model);
        ra -= level.u - level.U;

        ScalarField rb = inv_dt * (adj.p1[n + 1] - adj.p1[n]);
        rb += div_coeff_grad(model.map(Coefficient::d, 0, level.u), adj.p1[n]);
        rb += div_coeff_grad(model.map(Coefficient::g, 0, level.u), adj.e1[n]);
        rb -= level.p - level.P;

        res.ra[n] = std::move(ra);
        res.rb[n] = std::move(rb);
    }
    return res;
}

}  // namespace deadoil
