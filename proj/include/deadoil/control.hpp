#pragma once

#include <span>
#include <vector>

#include "deadoil/adjoint.hpp"
#include "deadoil/coefficients.hpp"
#include "deadoil/forward.hpp"
#include "deadoil/objective.hpp"

namespace deadoil {

/// Everything needed to evaluate J(f) and its reduced gradient.
struct Problem {
    Discretization disc;
    CoefficientModel model;
    PenaltyConfig pen;
    ScalarField u0;
    ScalarField p0;
    SpaceTimeField U;
    SpaceTimeField P;
};

/// Throws ConfigError when any field lives on a different grid than `disc`.
void check_consistency(const Problem& problem);

struct Evaluation {
    StateSolution state;
    CostBreakdown cost;
};

/// Forward solve plus cost.
Evaluation evaluate(const Problem& problem, const SpaceTimeField& f);

/// Reduced gradient of J with respect to f, represented against inner_qt.
struct GradientField {
    SpaceTimeField g;
};

struct GradientEvaluation {
    StateSolution state;
    CostBreakdown cost;
    AdjointSolution adjoint;
    GradientField gradient;
};

/// Forward solve, cost, adjoint solve and reduced gradient.
GradientEvaluation evaluate_gradient(const Problem& problem, const SpaceTimeField& f);

/// Second difference in time with the reflected closure f_{-1} = f_1,
/// f_{nt+1} = f_{nt-1} (discrete d_t f = 0 at both ends).
SpaceTimeField second_time_difference(const SpaceTimeField& f);

/// q0 beta1 |f|^{2q0-2} f - beta2 D_tt f: the exact gradient, under inner_qt,
/// of the discrete penalty terms computed by evaluate_penalty.
SpaceTimeField penalty_gradient(const SpaceTimeField& f, const PenaltyConfig& pen);

/// G = q0 beta1 |f|^{2q0-2} f - beta2 D_tt f - p1.
GradientField reduced_gradient(const SpaceTimeField& f, const SpaceTimeField& p1, const PenaltyConfig& pen);

/// Solves  -beta2 D_tt f + q0 beta1 |f|^{2q0-2} f = p1  for one node's time
/// series by damped Newton with a tridiagonal Jacobian. Converged when
/// max |residual| <= 1e-10 (1 + max |p1|); throws SolverError after 50
/// iterations.
std::vector<double> solve_optimality_time_bvp(std::span<const double> p1_trace, const PenaltyConfig& pen, double dt);

/// solve_optimality_time_bvp at every spatial node.
SpaceTimeField solve_optimality_bvp_field(const SpaceTimeField& p1, const PenaltyConfig& pen);

struct FdSample {
    double eps;
    double central_difference;
};

/// (J(f + eps h) - J(f - eps h)) / (2 eps) for each eps, via full forward solves.
std::vector<FdSample> fd_gradient_oracle(const Problem& problem, const SpaceTimeField& f, const SpaceTimeField& h,
                                         std::span<const double> eps_list);

struct GradcheckRow {
    double eps;
    double fd_value;
    double adjoint_value;  // inner_qt(G, h)
    double rel_error;      // |adjoint - fd| / |fd|, or the absolute gap when fd == 0
};

std::vector<GradcheckRow> gradient_check(const Problem& problem, const SpaceTimeField& f, const SpaceTimeField& h,
                                         std::span<const double> eps_list);

}  // namespace deadoil
