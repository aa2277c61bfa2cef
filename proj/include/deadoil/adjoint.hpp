#pragma once

#include "deadoil/coefficients.hpp"
#include "deadoil/forward.hpp"

namespace deadoil {

/// Multipliers of the saturation (e1) and pressure (p1) equations.
/// Level nt of both is zero.
struct AdjointSolution {
    SpaceTimeField e1;
    SpaceTimeField p1;
};

struct AdjointStep {
    ScalarField e1;
    ScalarField p1;
};

/// State and target values the adjoint step at level n reads.
struct AdjointLevelData {
    const ScalarField& u;
    const ScalarField& p;
    const ScalarField& U;
    const ScalarField& P;
};

/// One backward step n+1 -> n of
///
///   d_t e1 + div(phi'(u) grad e1) - d'(u) grad p . grad p1
///          - phi''(u) grad u . grad e1 - g'(u) grad p . grad e1 = u - U
///   d_t p1 + div(d(u) grad p1) + div(g(u) grad e1) = p - P
///
/// Diffusion is implicit at level n with coefficients from the level-n state;
/// the first-order terms use the level n+1 adjoint values. The p1 solve uses
/// the freshly computed e1 in div(g grad e1).
AdjointStep step_adjoint(const ScalarField& e1_next, const ScalarField& p1_next, const AdjointLevelData& level,
                         const CoefficientModel& model, double dt);

/// Backward sweep from zero terminal data. SolverError carries the level.
AdjointSolution solve_adjoint(const StateSolution& state, const SpaceTimeField& U, const SpaceTimeField& P,
                              const CoefficientModel& model);

struct AdjointResidual {
    SpaceTimeField ra;  // e1 equation, levels 0..nt-1; level nt holds e1 itself
    SpaceTimeField rb;  // p1 equation, levels 0..nt-1; level nt holds p1 itself
};

/// Strong-form residual of the discrete adjoint equations under the
/// step_adjoint stencils.
AdjointResidual adjoint_residual(const AdjointSolution& adj, const StateSolution& state, const SpaceTimeField& U,
                                 const SpaceTimeField& P, const CoefficientModel& model);

}  // namespace deadoil
