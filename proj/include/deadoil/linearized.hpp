#pragma once

#include "deadoil/coefficients.hpp"
#include "deadoil/forward.hpp"

namespace deadoil {

/// Perturbation (e, w, h) of (u, p, f).
struct Direction {
    SpaceTimeField e;
    SpaceTimeField w;
    SpaceTimeField h;
};

struct TangentResidual {
    SpaceTimeField res1;  // saturation row, levels 1..nt (level 0 is zero)
    SpaceTimeField res2;  // pressure row, levels 1..nt (level 0 is zero)
    ScalarField trace_e;  // initial-trace rows
    ScalarField trace_w;
};

/// Directional derivative of residual_F at (state, f) along `dir`:
///
///   res1 = d_t e - div(phi'(u) grad e) - div(phi''(u) e grad u)
///          - div(g(u) grad w) - div(g'(u) e grad p)
///   res2 = d_t w - div(d(u) grad w) - div(d'(u) e grad p) - h
///
/// discretized with exactly the lags of residual_F, so it is the derivative
/// of the discrete residual and not only of the continuous one.
TangentResidual apply_dF(const StateSolution& state, const SpaceTimeField& f, const CoefficientModel& model,
                         const Direction& dir);

}  // namespace deadoil
