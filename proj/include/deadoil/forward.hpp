#pragma once

#include "deadoil/coefficients.hpp"
#include "deadoil/mesh.hpp"

namespace deadoil {

/// Saturation u and global pressure p on every time level.
struct StateSolution {
    SpaceTimeField u;
    SpaceTimeField p;
};

struct StateStep {
    ScalarField u;
    ScalarField p;
};

/// One semi-implicit step of the state system with coefficients lagged at
/// level n. Pressure first:
///   (p' - p)/dt - div(d(u) grad p') = f'
/// then saturation, driven by the new pressure:
///   (u' - u)/dt - div(phi'(u) grad u') = div(g(u) grad p') [+ s']
/// `saturation_source`, when given, is an extra right-hand side for the
/// saturation equation (used for manufactured solutions).
StateStep step_state(const ScalarField& u_n, const ScalarField& p_n, const ScalarField& f_next,
                     const CoefficientModel& model, double dt, const ScalarField* saturation_source = nullptr);

/// Integrates from (u0, p0) over all nt steps; f's level n+1 drives the step
/// to level n+1. SolverError from a step is rethrown with its time level.
StateSolution solve_forward(const CoefficientModel& model, const ScalarField& u0, const ScalarField& p0,
                            const SpaceTimeField& f, const SpaceTimeField* saturation_source = nullptr);

/// Strong-form residual of the discrete state equations. Levels 1..nt use the
/// step_state stencils; level 0 holds the initial-data mismatch.
struct StateResidual {
    SpaceTimeField r1;  // saturation equation
    SpaceTimeField r2;  // pressure equation
};

StateResidual residual_F(const StateSolution& state, const SpaceTimeField& f, const CoefficientModel& model,
                         const ScalarField& u0, const ScalarField& p0,
                         const SpaceTimeField* saturation_source = nullptr);

}  // namespace deadoil
