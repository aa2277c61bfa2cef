#include "deadoil/linear_solver.hpp"

#include <cmath>

#include "deadoil/error.hpp"

namespace deadoil {

ShiftedDiffusion::ShiftedDiffusion(const ScalarField& coefficient, double dt)
    : faces_(coefficient), inv_dt_(1.0 / dt), diagonal_(coefficient.size()) {
    const Discretization& d = faces_.disc;
    const int nx = d.nx();
    const double ihx2 = 1.0 / (d.hx() * d.hx());
    const double ihy2 = 1.0 / (d.hy() * d.hy());
    for (int j = 0; j < d.ny(); ++j) {
        for (int i = 0; i < nx; ++i) {
            const std::size_t k = d.index(i, j);
            const std::size_t fx = static_cast<std::size_t>(j) * (nx + 1) + i;
            diagonal_[k] = inv_dt_ + (faces_.x_faces[fx] + faces_.x_faces[fx + 1]) * ihx2 +
                           (faces_.y_faces[k] + faces_.y_faces[k + nx]) * ihy2;
        }
    }
}

void ShiftedDiffusion::apply(std::span<const double> x, std::span<double> out) const {
    apply_div_coeff_grad(faces_, x, out);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = inv_dt_ * x[k] - out[k];
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

CgResult conjugate_gradient(const ShiftedDiffusion& op, std::span<const double> rhs, std::span<double> x,
                            const CgSettings& settings) {
    const std::size_t n = rhs.size();
    const int max_it = settings.max_iterations > 0 ? settings.max_iterations : static_cast<int>(10 * n);
    const double rhs_norm = std::sqrt(dot(rhs, rhs));
    CgResult result;
    if (!std::isfinite(rhs_norm)) {
        throw SolverError("conjugate gradients: right-hand side is not finite", rhs_norm);
    }
    if (rhs_norm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return result;
    }

    std::vector<double> r(n), z(n), p(n), q(n);
    op.apply(x, q);
    for (std::size_t k = 0; k < n; ++k) r[k] = rhs[k] - q[k];
    const auto& diag = op.diagonal();

    double res_norm = std::sqrt(dot(r, r));
    for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
    p = z;
    double rz = dot(r, z);

    while (!(res_norm <= settings.relative_tolerance * rhs_norm)) {
        if (!std::isfinite(res_norm)) {
            throw SolverError("conjugate gradients: residual is not finite", res_norm);
        }
        if (result.iterations >= max_it) {
            result.relative_residual = res_norm / rhs_norm;
            throw SolverError("conjugate gradients did not converge: relative residual " +
                                  std::to_string(result.relative_residual) + " after " +
                                  std::to_string(result.iterations) + " iterations",
                              result.relative_residual);
        }
        op.apply(p, q);
        const double alpha = rz / dot(p, q);
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += alpha * p[k];
            r[k] -= alpha * q[k];
        }
        res_norm = std::sqrt(dot(r, r));
        for (std::size_t k = 0; k < n; ++k) z[k] = r[k] / diag[k];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
        ++result.iterations;
    }
    result.relative_residual = res_norm / rhs_norm;
    return result;
}

ScalarField solve_shifted_diffusion(const ScalarField& coefficient, double dt, const ScalarField& rhs) {
    require_same_grid(coefficient.disc(), rhs.disc(), "solve_shifted_diffusion");
    ShiftedDiffusion op(coefficient, dt);
    ScalarField x(rhs.disc());
    conjugate_gradient(op, rhs.values(), x.values());
    return x;
}

}  // namespace deadoil
