#pragma once

#include "deadoil/forward.hpp"
#include "deadoil/mesh.hpp"

namespace deadoil {

/// Penalty weights beta1, beta2 > 0 and exponent parameter q0 >= 1 of the
/// control cost (beta1/2)||f||_{2q0}^{2q0} + (beta2/2)||d_t f||_2^2.
struct PenaltyConfig {
    double beta1 = 1.0;
    double beta2 = 1.0;
    double q0 = 1.5;

    /// Throws ConfigError unless beta1 > 0, beta2 > 0 and q0 >= 1.
    void validate() const;
};

struct CostBreakdown {
    double misfit_u = 0.0;
    double misfit_p = 0.0;
    double penalty_f = 0.0;
    double penalty_dtf = 0.0;
    double total = 0.0;
};

/// J = 1/2 ||u-U||^2 + 1/2 ||p-P||^2 + (beta1/2) ||f||_{2q0}^{2q0} + (beta2/2) ||d_t f||^2.
///
/// Misfits and the f penalty use the trapezoidal Q_T quadrature; the d_t f
/// penalty uses forward differences with the rectangle rule over intervals.
CostBreakdown evaluate_cost(const StateSolution& state, const SpaceTimeField& f, const SpaceTimeField& U,
                            const SpaceTimeField& P, const PenaltyConfig& pen);

/// Only the two control penalty terms (misfits left at zero).
CostBreakdown evaluate_penalty(const SpaceTimeField& f, const PenaltyConfig& pen);

}  // namespace deadoil
