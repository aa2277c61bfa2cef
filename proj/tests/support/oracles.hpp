#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the library's stencil or solver code; matrices are
// assembled from scratch and solved with Eigen.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cstdint>
#include <vector>

#include "deadoil/control.hpp"
#include "deadoil/forward.hpp"

namespace oracle {

using deadoil::CoefficientModel;
using deadoil::Discretization;
using deadoil::ScalarField;
using deadoil::SpaceTimeField;

Eigen::VectorXd to_eigen(const ScalarField& v);
ScalarField from_eigen(const Discretization& disc, const Eigen::VectorXd& v);

/// Matrix of v -> div(c grad v) with homogeneous Dirichlet data, face values
/// the mean of the two adjacent nodal values (boundary faces use the interior node).
Eigen::SparseMatrix<double> div_coeff_grad_matrix(const ScalarField& c);

/// Sparse direct solve of (I/dt - div(c grad .)) x = rhs.
ScalarField shifted_solve(const ScalarField& c, double dt, const ScalarField& rhs);

/// Eigenvalue of -Delta_h for sin(pi x) sin(pi y) on a square grid.
double sinprod_eigenvalue(const Discretization& disc);

/// Nodal samples of a function of (x, y).
template <class Fn>
ScalarField sample(const Discretization& disc, Fn fn) {
    ScalarField out(disc);
    for (int j = 0; j < disc.ny(); ++j)
        for (int i = 0; i < disc.nx(); ++i) out.at(i, j) = fn(disc.x(i), disc.y(j));
    return out;
}

/// Dense Newton solve of -beta2 D_tt f + q0 beta1 |f|^{2q0-2} f = p1 with the
/// reflected closure, full Jacobian and LU, residual driven to 1e-13 relative.
std::vector<double> dense_newton_bvp(const std::vector<double>& p1, const deadoil::PenaltyConfig& pen, double dt);

/// Max-norm residual of the time BVP for a given f.
double bvp_residual_max(const std::vector<double>& f, const std::vector<double>& p1,
                        const deadoil::PenaltyConfig& pen, double dt);

/// Decoupled heat problem (phi = r, g = 0, d = 1, f = 0, p0 = sinprod):
/// relative L2 error of p at t = T against exp(-2 pi^2 T) sinprod.
double heat_relative_error(int n, int nt, double T);

struct MmsErrors {
    double u = 0.0;
    double p = 0.0;
};

/// Manufactured solution u* = 4 e^{-t} x(1-x)y(1-y), p* = e^{-t} sin(pi x) sin(pi y)
/// driven through the nonlinear model with analytic sources. Relative L2 errors at t = T.
MmsErrors mms_errors(const CoefficientModel& model, int n, int nt, double T);

/// Coefficients used throughout the nonlinear tests.
CoefficientModel nonlinear_model();
/// phi = r, g = 0, d = 1.
CoefficientModel decoupled_model();

/// The shipped default problem rebuilt in code on an arbitrary grid, with f.
struct ProblemWithControl {
    deadoil::Problem problem;
    SpaceTimeField f;
};
ProblemWithControl default_problem(const Discretization& disc);

/// Decoupled linear bed with attainable targets: P and U are the state
/// realized by f_target = sin(pi x) sin(pi y) sin(pi t / T).
deadoil::Problem decoupled_attainable_problem(const Discretization& disc);

/// Norm of a state residual pair over all levels (plain Euclidean, scaled by sqrt(dt hx hy)).
double residual_norm(const SpaceTimeField& a, const SpaceTimeField& b);

/// Taylor remainders ||F(x + s d) - F(x) - s dF(d)|| for each s, with seeded
/// smooth random base (u, p, f) and direction (e, w, h).
std::vector<double> taylor_remainders(const Discretization& disc, std::uint64_t seed, const std::vector<double>& s_list);

}  // namespace oracle
