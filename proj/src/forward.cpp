#include "deadoil/forward.hpp"

#include "deadoil/error.hpp"
#include "deadoil/linear_solver.hpp"

namespace deadoil {

StateStep step_state(const ScalarField& u_n, const ScalarField& p_n, const ScalarField& f_next,
                     const CoefficientModel& model, double dt, const ScalarField* saturation_source) {
    require_same_grid(u_n.disc(), p_n.disc(), "step_state");
    require_same_grid(u_n.disc(), f_next.disc(), "step_state");
    if (!(dt > 0.0)) throw ConfigError("step_state: dt must be positive");
    const double inv_dt = 1.0 / dt;

    ScalarField p_rhs = inv_dt * p_n;
    p_rhs += f_next;
    ScalarField p_next = solve_shifted_diffusion(model.map(Coefficient::d, 0, u_n), dt, p_rhs);

    ScalarField u_rhs = inv_dt * u_n;
    u_rhs += div_coeff_grad(model.map(Coefficient::g, 0, u_n), p_next);
    if (saturation_source != nullptr) u_rhs += *saturation_source;
    ScalarField u_next = solve_shifted_diffusion(model.map(Coefficient::phi, 1, u_n), dt, u_rhs);

    return {std::move(u_next), std::move(p_next)};
}

StateSolution solve_forward(const CoefficientModel& model, const ScalarField& u0, const ScalarField& p0,
                            const SpaceTimeField& f, const SpaceTimeField* saturation_source) {
    const Discretization& disc = f.disc();
    require_same_grid(disc, u0.disc(), "solve_forward");
    require_same_grid(disc, p0.disc(), "solve_forward");
    if (saturation_source != nullptr) require_same_grid(disc, saturation_source->disc(), "solve_forward");

    StateSolution state{SpaceTimeField(disc), SpaceTimeField(disc)};
    state.u[0] = u0;
    state.p[0] = p0;
    for (int n = 0; n < disc.nt(); ++n) {
        try {
            auto step = step_state(state.u[n], state.p[n], f[n + 1], model, disc.dt(),
                                   saturation_source ? &(*saturation_source)[n + 1] : nullptr);
            state.u[n + 1] = std::move(step.u);
            state.p[n + 1] = std::move(step.p);
        } catch (const SolverError& e) {
            throw SolverError(std::string("forward step to level ") + std::to_string(n + 1) + ": " + e.what(),
                              e.residual(), n + 1);
        }
    }
    return state;
}

StateResidual residual_F(const StateSolution& state, const SpaceTimeField& f, const CoefficientModel& model,
                         const ScalarField& u0, const ScalarField& p0, const SpaceTimeField* saturation_source) {
    const Discretization& disc = f.disc();
    require_same_grid(disc, state.u.disc(), "residual_F");
    require_same_grid(disc, state.p.disc(), "residual_F");
    const double inv_dt = 1.0 / disc.dt();

    StateResidual res{SpaceTimeField(disc), SpaceTimeField(disc)};
    res.r1[0] = state.u[0] - u0;
    res.r2[0] = state.p[0] - p0;
    for (int n = 1; n <= disc.nt(); ++n) {
        const ScalarField& u_prev = state.u[n - 1];
        ScalarField r1 = inv_dt * (state.u[n] - u_prev);
        r1 -= div_coeff_grad(model.map(Coefficient::phi, 1, u_prev), state.u[n]);
        r1 -= div_coeff_grad(model.map(Coefficient::g, 0, u_prev), state.p[n]);
        if (saturation_source != nullptr) r1 -= (*saturation_source)[n];

        ScalarField r2 = inv_dt * (state.p[n] - state.p[n - 1]);
        r2 -= div_coeff_grad(model.map(Coefficient::d, 0, u_prev), state.p[n]);
        r2 -= f[n];

        res.r1[n] = std::move(r1);
        res.r2[n] = std::move(r2);
    }
    return res;
}

}  // namespace deadoil
