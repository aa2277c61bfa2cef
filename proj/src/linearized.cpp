#include "deadoil/linearized.hpp"

namespace deadoil {

TangentResidual apply_dF(const StateSolution& state, const SpaceTimeField& f, const CoefficientModel& model,
                         const Direction& dir) {
    const Discretization& disc = f.disc();
    require_same_grid(disc, state.u.disc(), "apply_dF");
    require_same_grid(disc, state.p.disc(), "apply_dF");
    require_same_grid(disc, dir.e.disc(), "apply_dF");
    require_same_grid(disc, dir.w.disc(), "apply_dF");
    require_same_grid(disc, dir.h.disc(), "apply_dF");
    const double inv_dt = 1.0 / disc.dt();

    TangentResidual out{SpaceTimeField(disc), SpaceTimeField(disc), dir.e[0], dir.w[0]};
    for (int n = 1; n <= disc.nt(); ++n) {
        const ScalarField& u_prev = state.u[n - 1];
        const ScalarField& e_prev = dir.e[n - 1];

        ScalarField r1 = inv_dt * (dir.e[n] - e_prev);
        r1 -= div_coeff_grad(model.map(Coefficient::phi, 1, u_prev), dir.e[n]);
        r1 -= div_coeff_grad(hadamard(model.map(Coefficient::phi, 2, u_prev), e_prev), state.u[n]);
        r1 -= div_coeff_grad(model.map(Coefficient::g, 0, u_prev), dir.w[n]);
        r1 -= div_coeff_grad(hadamard(model.map(Coefficient::g, 1, u_prev), e_prev), state.p[n]);

        ScalarField r2 = inv_dt * (dir.w[n] - dir.w[n - 1]);
        r2 -= div_coeff_grad(model.map(Coefficient::d, 0, u_prev), dir.w[n]);
        r2 -= div_coeff_grad(hadamard(model.map(Coefficient::d, 1, u_prev), e_prev), state.p[n]);
        r2 -= dir.h[n];

        out.res1[n] = std::move(r1);
        out.res2[n] = std::move(r2);
    }
    return out;
}

}  // namespace deadoil
