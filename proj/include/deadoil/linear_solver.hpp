#pragma once

#include "deadoil/mesh.hpp"

namespace deadoil {

/// The SPD operator (1/dt) I - div(c grad .) with c > 0, applied matrix-free.
class ShiftedDiffusion {
public:
    ShiftedDiffusion(const ScalarField& coefficient, double dt);

    const Discretization& disc() const { return faces_.disc; }
    void apply(std::span<const double> x, std::span<double> out) const;
    const std::vector<double>& diagonal() const { return diagonal_; }

private:
    FaceCoefficients faces_;
    double inv_dt_;
    std::vector<double> diagonal_;
};

struct CgSettings {
    double relative_tolerance = 1e-10;
    int max_iterations = 0;  // 0: 10 * unknowns
};

struct CgResult {
    int iterations = 0;
    double relative_residual = 0.0;
};

/// Jacobi-preconditioned conjugate gradients on op x = rhs, starting from the
/// given x. Converged when ||rhs - op x||_2 <= tol ||rhs||_2; throws
/// SolverError carrying the relative residual otherwise.
CgResult conjugate_gradient(const ShiftedDiffusion& op, std::span<const double> rhs, std::span<double> x,
                            const CgSettings& settings = {});

/// Convenience wrapper: solves ((1/dt) I - div(c grad .)) x = rhs from a zero guess.
ScalarField solve_shifted_diffusion(const ScalarField& coefficient, double dt, const ScalarField& rhs);

}  // namespace deadoil
