#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace deadoil {

/// Uniform grid on the unit square times a uniform time axis on [0, T].
///
/// Only interior nodes carry unknowns; node (i, j), 0 <= i < nx, 0 <= j < ny,
/// sits at ((i+1) hx, (j+1) hy). Boundary values are zero (homogeneous
/// Dirichlet) and are never stored.
class Discretization {
public:
    Discretization(int nx, int ny, int nt, double T);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nt() const { return nt_; }
    double T() const { return T_; }
    double hx() const { return hx_; }
    double hy() const { return hy_; }
    double dt() const { return dt_; }

    std::size_t nodes() const { return static_cast<std::size_t>(nx_) * ny_; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

    double x(int i) const { return static_cast<double>(i + 1) / (nx_ + 1); }
    double y(int j) const { return static_cast<double>(j + 1) / (ny_ + 1); }
    double t(int n) const { return n * dt_; }

    double cell_area() const { return hx_ * hy_; }
    /// nx*ny*hx*hy*T: the measure the quadratures assign to Q_T.
    double interior_volume() const { return static_cast<double>(nodes()) * cell_area() * T_; }

    /// Trapezoidal time weight of level n (1/2 at both ends).
    double time_weight(int n) const { return (n == 0 || n == nt_) ? 0.5 : 1.0; }

    bool operator==(const Discretization&) const = default;

private:
    int nx_;
    int ny_;
    int nt_;
    double T_;
    double hx_;
    double hy_;
    double dt_;
};

/// Values at the interior nodes of one time level.
class ScalarField {
public:
    explicit ScalarField(const Discretization& disc, double fill = 0.0);
    ScalarField(const Discretization& disc, std::vector<double> values);

    const Discretization& disc() const { return disc_; }
    std::size_t size() const { return values_.size(); }

    double& operator[](std::size_t k) { return values_[k]; }
    double operator[](std::size_t k) const { return values_[k]; }
    double& at(int i, int j) { return values_[disc_.index(i, j)]; }
    double at(int i, int j) const { return values_[disc_.index(i, j)]; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }

    ScalarField& operator+=(const ScalarField& other);
    ScalarField& operator-=(const ScalarField& other);
    ScalarField& operator*=(double s);
    /// this += s * other
    ScalarField& axpy(double s, const ScalarField& other);

    double max_abs() const;
    double min() const;
    double max() const;

    bool operator==(const ScalarField&) const = default;

private:
    Discretization disc_;
    std::vector<double> values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double s, ScalarField a);
/// Nodewise product.
ScalarField hadamard(const ScalarField& a, const ScalarField& b);

/// One ScalarField per time level 0..nt.
class SpaceTimeField {
public:
    explicit SpaceTimeField(const Discretization& disc, double fill = 0.0);
    /// Replicates `frame` at every time level.
    static SpaceTimeField constant_in_time(const ScalarField& frame);

    const Discretization& disc() const { return disc_; }
    int levels() const { return static_cast<int>(frames_.size()); }

    ScalarField& operator[](int n) { return frames_[n]; }
    const ScalarField& operator[](int n) const { return frames_[n]; }

    SpaceTimeField& operator+=(const SpaceTimeField& other);
    SpaceTimeField& operator-=(const SpaceTimeField& other);
    SpaceTimeField& operator*=(double s);
    SpaceTimeField& axpy(double s, const SpaceTimeField& other);

    double max_abs() const;

    bool operator==(const SpaceTimeField&) const = default;

private:
    Discretization disc_;
    std::vector<ScalarField> frames_;
};

SpaceTimeField operator+(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b);
SpaceTimeField operator*(double s, SpaceTimeField a);

/// Throws ConfigError when the two grids differ.
void require_same_grid(const Discretization& a, const Discretization& b, const char* where);

// ---------------------------------------------------------------------------
// Discrete operators
// ---------------------------------------------------------------------------

/// Face diffusivities of div(c grad .) on the five-point stencil.
///
/// x-faces are indexed (i, j) for i = 0..nx, the face between node i-1 and
/// node i; faces touching the boundary take the interior node's value.
/// y-faces likewise with j = 0..ny. Interior faces use the arithmetic mean.
struct FaceCoefficients {
    explicit FaceCoefficients(const ScalarField& c);

    Discretization disc;
    std::vector<double> x_faces;  // (nx+1) * ny, index j*(nx+1) + i
    std::vector<double> y_faces;  // nx * (ny+1), index j*nx + i
};

/// out = div(c grad v) on the five-point flux stencil.
void apply_div_coeff_grad(const FaceCoefficients& faces, std::span<const double> v, std::span<double> out);
ScalarField div_coeff_grad(const ScalarField& c, const ScalarField& v);

/// Nodewise grad(a).grad(b) with centered differences, zero boundary values.
ScalarField grad_dot(const ScalarField& a, const ScalarField& b);

/// Discrete L^p(Q_T) norm: trapezoidal in time, nodal sums times hx*hy in space.
double lp_norm_qt(const SpaceTimeField& v, double exponent);

/// Discrete L^2(Q_T) inner product with the same weights as lp_norm_qt.
double inner_qt(const SpaceTimeField& a, const SpaceTimeField& b);

/// Spatial L^2(Omega) norm of one level.
double l2_norm(const ScalarField& v);

/// Forward differences (v^{n+1} - v^n)/dt for n < nt; level nt repeats level nt-1.
SpaceTimeField time_forward_diff(const SpaceTimeField& v);

/// Rectangle-rule L^2 norm over the nt intervals: levels 0..nt-1 weighted dt,
/// level nt ignored. Pairs with time_forward_diff.
double interval_l2_norm(const SpaceTimeField& v);

}  // namespace deadoil
