#include "deadoil/objective.hpp"

#include <cmath>

#include "deadoil/error.hpp"

namespace deadoil {

void PenaltyConfig::validate() const {
    if (!(beta1 > 0.0)) throw ConfigError("penalty: beta1 must be positive");
    if (!(beta2 > 0.0)) throw ConfigError("penalty: beta2 must be positive");
    if (!(q0 >= 1.0)) throw ConfigError("penalty: q0 must be >= 1");
}

CostBreakdown evaluate_penalty(const SpaceTimeField& f, const PenaltyConfig& pen) {
    pen.validate();
    CostBreakdown c;
    const double exponent = 2.0 * pen.q0;
    c.penalty_f = 0.5 * pen.beta1 * std::pow(lp_norm_qt(f, exponent), exponent);
    const double dtf = interval_l2_norm(time_forward_diff(f));
    c.penalty_dtf = 0.5 * pen.beta2 * dtf * dtf;
    c.total = c.penalty_f + c.penalty_dtf;
    return c;
}

CostBreakdown evaluate_cost(const StateSolution& state, const SpaceTimeField& f, const SpaceTimeField& U,
                            const SpaceTimeField& P, const PenaltyConfig& pen) {
    const Discretization& disc = f.disc();
    require_same_grid(disc, state.u.disc(), "evaluate_cost");
    require_same_grid(disc, state.p.disc(), "evaluate_cost");
    require_same_grid(disc, U.disc(), "evaluate_cost");
    require_same_grid(disc, P.disc(), "evaluate_cost");

    CostBreakdown c = evaluate_penalty(f, pen);
    const double mu = lp_norm_qt(state.u - U, 2.0);
    const double mp = lp_norm_qt(state.p - P, 2.0);
    c.misfit_u = 0.5 * mu * mu;
    c.misfit_p = 0.5 * mp * mp;
    c.total = c.misfit_u + c.misfit_p + c.penalty_f + c.penalty_dtf;
    return c;
}

}  // namespace deadoil
